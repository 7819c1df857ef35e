"""Build data/*.csv from a named family graph.
usage: gen.py marriages.txt outdir [seed]
marriages.txt lines: "A B" giant/island edge, optional "A>B" meaning A is the doge side.
"""
import sys, random, statistics, collections, itertools
from doges import DOGES

ALIASES = [("Badoer","Badoero"),("Cornaro","Corner"),("Gradenico","Gradenigo"),("Mastropiero","Malipiero"),
 ("Michele","Michel"),("Michiel","Michel"),("Falier","Faliero"),("Giustinian","Giustiniani"),("Donà","Donato"),("Dona","Donato"),
 ("Pisana","Pisani"),("Pexaro","Pesaro"),("Condulmer","Condulmiero"),("Morosina","Morosini"),("Particiaco","Participazio"),
 ("Memo","Memmo"),("Grimana","Grimani"),("Loredana","Loredan"),("Priola","Priuli")]
CANON = {a.lower(): b for a, b in ALIASES}
def canon(s): return CANON.get(s.lower(), s)

def doge_family(name):
    toks = [t for t in name.split() if t not in ("I","II","III","IV")]
    if len(toks) >= 2 and toks[-2] in ("da","di","de"): return toks[-2]+" "+toks[-1]
    return canon(toks[-1])

FIRST = ["Felicita","Zilia","Elena","Elisabetta","Caterina","Maria","Lucia","Marina","Chiara","Orsa","Tommasina",
 "Agnese","Franceschina","Giovanna","Laura","Paola","Marchesina","Costanza","Regina","Taddea","Giustina","Cristina",
 "Andriana","Pellegrina","Polissena","Benedetta","Contessa","Samaritana","Agnesina","Cateruzza","Marietta","Isabetta",
 "Bianca","Dea","Fiordelise","Maddalena","Angela","Beatrice","Luisa","Teodora"]

TOPONYM_WIVES = ["Valdrada di Sicilia", "Loicia da Prata", "Marchesina da Carrara", "Costanza di Svevia", "Agnese da Camino", "Maria da Mosto"]
SURNAMELESS = ["Cecilia", "Carola", "Gisla", "Felicia", "Giovanna", "Richelda", "Tommasina", "Orsa", "Cristiana", "Marina", "Gualdrada", "Aurelia", "Benedetta", "Agata", "Sofia", "Teodora", "Imelda", "Matelda", "Anna", "Elena"]

def load_graph(fn):
    edges = []
    for line in open(fn):
        line = line.split('#')[0].strip()
        if not line: continue
        side = None
        if '>' in line:
            a, b = [t.strip() for t in line.split('>')]; side = a
        else:
            a, b = line.split()[:2]
        edges.append((a, b, side))
    return edges

def match(doges, wives, tol=1):
    """Reimplementation of the ingest matching rule; returns doge index per wife."""
    order = sorted(range(len(doges)), key=lambda i: doges[i][1])
    out = []
    for (_, s, e) in wives:
        lo, hi = s - tol, e + tol
        best, bs = None, -1.0
        for i in order:
            ds, de = doges[i][1], doges[i][2]
            il, ih = max(lo, ds), min(hi, de)
            if il > ih: continue
            hull = max(hi, de) - min(lo, ds) + 1
            sc = (ih - il + 1) / hull
            if sc > bs: bs, best = sc, i
        out.append(best)
    return out

def main():
    fn, outdir = sys.argv[1], sys.argv[2]
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 1
    rng = random.Random(seed)
    edges = load_graph(fn)
    doges = [list(d) for d in DOGES]
    fam = [doge_family(d[0]) for d in doges]
    recs = [(d[0], d[1], d[2]) for d in doges]
    # a doge is usable if a wife sharing his tenure matches him
    usable = [k == "D" and match(recs, [(None, d[1], d[2])])[0] == i for i, (d, k) in enumerate(zip(doges, [d[3] for d in doges]))]
    by_fam = collections.defaultdict(list)
    for i, f in enumerate(fam):
        if usable[i]: by_fam[f].append(i)
    nodes = sorted({x for a, b, _ in edges for x in (a, b)})
    best = None
    for attempt in range(4000):
        load = collections.Counter()
        assign = []
        ok = True
        for (a, b, side) in rng.sample(edges, len(edges)):
            opts = [side] if side else [a, b]
            rng.shuffle(opts)
            cands = []
            for f in opts:
                for d in by_fam.get(f, []):
                    cands.append((load[d], rng.random(), d, f))
            if not cands: ok = False; break
            cands.sort()
            l, _, d, f = cands[0]
            if l >= 2: ok = False; break
            load[d] += 1
            assign.append((d, f, b if f == a else a))
        if not ok: continue
        as_doge = {f for _, f, _ in assign}
        as_wife = {w for _, _, w in assign}
        both = len(as_doge & as_wife)
        pen = abs(both - 14) * 10 + (20 if "Mocenigo" in as_wife else 0) + sum(1 for v in load.values() if v > 1) * 3
        if best is None or pen < best[0]:
            best = (pen, assign)
        if pen == 0 or (best[0] <= 3 and attempt > 1000): break
    pen, assign = best
    print("assignment penalty", pen, file=sys.stderr)
    return doges, fam, usable, assign, rng, outdir

if __name__ == "__main__":
    state = main()
    import build
    build.finish(*state)
