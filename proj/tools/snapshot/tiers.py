A, AN, X, E, N, NN, S, V, NONE = "Apostoliche", "Ancient", "Extinct pre-serrata", "Evangeliche", "Nuove", "Nuovissime", "Soldi", "Vecchie", "None"
TIERS = {
 "Badoero": A, "Barozzi": A, "Contarini": A, "Dandolo": A, "Faliero": A, "Gradenigo": A, "Memmo": A, "Michel": A,
 "Morosini": A, "Polani": A, "Sanudo": A, "Tiepolo": A,
 "Bembo": E, "Bragadin": E, "Corner": E, "Giustiniani": E,
 "Soranzo": V, "Zorzi": V, "Querini": V, "Dolfin": V, "Zane": V, "Zeno": V, "Marcello": V, "Barbaro": V, "Salamon": V,
 "Ziani": V, "Celsi": V, "Steno": V, "Foscari": V, "Venier": V, "Zulian": V,
 "Priuli": N, "Mocenigo": N, "Loredan": N, "Grimani": N, "Barbarigo": N, "Gritti": N, "Tron": N, "Moro": N,
 "Trevisan": N, "Lando": N, "Donato": N, "Pesaro": N, "Cappello": N, "Erizzo": N, "Molin": N, "Sagredo": N,
 "Valier": N, "Pisani": N, "Malipiero": N, "Foscarini": N, "Renier": N, "Nani": N, "Emo": N, "Diedo": N,
 "Vendramin": NN, "Cicogna": NN, "Condulmiero": NN, "Ruzzini": NN, "Minotto": NN,
 "Manin": S, "Labia": S, "Widmann": S,
 "Orseolo": AN, "Candiano": AN, "Participazio": AN, "Ipato": AN, "Galbaio": AN,
 "Tradonico": X, "Monegario": X, "Flabanico": X, "Selvo": X, "Barbolano": X, "Tribuno": X, "Antenori": X,
 "Anafesto": X, "Tegalliano": X, "Gaulo": X, "Leone": X, "Cornicola": X, "Fabriciaco": X,
}
VARIANT_SPELLING = {"Corner": "Cornaro", "Gradenigo": "Gradenico", "Badoero": "Badoer", "Faliero": "Falier",
 "Giustiniani": "Giustinian", "Michel": "Michiel", "Malipiero": "Mastropiero", "Pesaro": "Pexaro",
 "Condulmiero": "Condulmer", "Donato": "Donà"}
