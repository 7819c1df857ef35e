# (name, start, end, kind) kind: D canonical doge, M magister militum, C co-doge
DOGES = [
("Paolo Lucio Anafesto",697,717,"D"),
("Marcello Tegalliano",717,726,"D"),
("Orso Ipato",726,737,"D"),
("Domenico Leone",737,738,"M"),
("Felice Cornicola",738,739,"M"),
("Deodato Ipato",739,740,"M"),
("Gioviano Ipato",740,741,"M"),
("Giovanni Fabriciaco",741,742,"M"),
("Teodato Ipato",742,755,"D"),
("Galla Gaulo",755,756,"D"),
("Domenico Monegario",756,764,"D"),
("Maurizio Galbaio",764,787,"D"),
("Giovanni Galbaio",787,804,"D"),
("Maurizio II Galbaio",796,804,"C"),
("Obelerio degli Antenori",804,811,"D"),
("Beato degli Antenori",808,811,"C"),
("Agnello Participazio",811,827,"D"),
("Giustiniano Participazio",827,829,"D"),
("Giovanni I Participazio",829,836,"D"),
("Pietro Tradonico",836,864,"D"),
("Giovanni Tradonico",837,863,"C"),
("Orso I Participazio",864,881,"D"),
("Giovanni II Participazio",881,887,"D"),
("Pietro I Candiano",887,887,"D"),
("Pietro Tribuno",888,912,"D"),
("Orso II Participazio",912,932,"D"),
("Pietro II Candiano",932,939,"D"),
("Pietro Participazio",939,942,"D"),
("Pietro III Candiano",942,959,"D"),
("Pietro IV Candiano",959,976,"D"),
("Pietro I Orseolo",976,978,"D"),
("Vitale Candiano",978,979,"D"),
("Tribuno Memmo",979,991,"D"),
("Pietro II Orseolo",991,1009,"D"),
("Giovanni Orseolo",1002,1006,"C"),
("Otto Orseolo",1009,1026,"D"),
("Pietro Barbolano",1026,1032,"D"),
("Domenico Flabanico",1032,1043,"D"),
("Domenico Contarini",1043,1071,"D"),
("Domenico Selvo",1071,1084,"D"),
("Vitale Faliero",1084,1095,"D"),
("Vitale I Michiel",1096,1102,"D"),
("Ordelafo Faliero",1102,1117,"D"),
("Domenico Michiel",1117,1130,"D"),
("Pietro Polani",1130,1148,"D"),
("Domenico Morosini",1148,1156,"D"),
("Vitale II Michiel",1156,1172,"D"),
("Sebastiano Ziani",1172,1178,"D"),
("Orio Mastropiero",1178,1192,"D"),
("Enrico Dandolo",1192,1205,"D"),
("Pietro Ziani",1205,1229,"D"),
("Jacopo Tiepolo",1229,1249,"D"),
("Marino Morosini",1249,1253,"D"),
("Reniero Zeno",1253,1268,"D"),
("Lorenzo Tiepolo",1268,1275,"D"),
("Jacopo Contarini",1275,1280,"D"),
("Giovanni Dandolo",1280,1289,"D"),
("Pietro Gradenigo",1289,1311,"D"),
("Marino Zorzi",1311,1312,"D"),
("Giovanni Soranzo",1312,1328,"D"),
("Francesco Dandolo",1329,1339,"D"),
("Bartolomeo Gradenigo",1339,1342,"D"),
("Andrea Dandolo",1343,1354,"D"),
("Marino Faliero",1354,1355,"D"),
("Giovanni Gradenigo",1355,1356,"D"),
("Giovanni Dolfin",1356,1361,"D"),
("Lorenzo Celsi",1361,1365,"D"),
("Marco Corner",1365,1368,"D"),
("Andrea Contarini",1368,1382,"D"),
("Michele Morosini",1382,1382,"D"),
("Antonio Venier",1382,1400,"D"),
("Michele Steno",1400,1413,"D"),
("Tommaso Mocenigo",1414,1423,"D"),
("Francesco Foscari",1423,1457,"D"),
("Pasquale Malipiero",1457,1462,"D"),
("Cristoforo Moro",1462,1471,"D"),
("Nicolo Tron",1471,1473,"D"),
("Nicolo Marcello",1473,1474,"D"),
("Pietro Mocenigo",1474,1476,"D"),
("Andrea Vendramin",1476,1478,"D"),
("Giovanni Mocenigo",1478,1485,"D"),
("Marco Barbarigo",1485,1486,"D"),
("Agostino Barbarigo",1486,1501,"D"),
("Leonardo Loredan",1501,1521,"D"),
("Antonio Grimani",1521,1523,"D"),
("Andrea Gritti",1523,1538,"D"),
("Pietro Lando",1539,1545,"D"),
("Francesco Dona",1545,1553,"D"),
("Marcantonio Trevisan",1553,1554,"D"),
("Francesco Venier",1554,1556,"D"),
("Lorenzo Priuli",1556,1559,"D"),
("Girolamo Priuli",1559,1567,"D"),
("Pietro Loredan",1567,1570,"D"),
("Alvise I Mocenigo",1570,1577,"D"),
("Sebastiano Venier",1577,1578,"D"),
("Nicolo da Ponte",1578,1585,"D"),
("Pasquale Cicogna",1585,1595,"D"),
("Marino Grimani",1595,1605,"D"),
("Leonardo Dona",1606,1612,"D"),
("Marcantonio Memmo",1612,1615,"D"),
("Giovanni Bembo",1615,1618,"D"),
("Nicolo Dona",1618,1618,"D"),
("Antonio Priuli",1618,1623,"D"),
("Francesco Contarini",1623,1624,"D"),
("Giovanni I Corner",1625,1629,"D"),
("Nicolo Contarini",1630,1631,"D"),
("Francesco Erizzo",1631,1646,"D"),
("Francesco Molin",1646,1655,"D"),
("Carlo Contarini",1655,1656,"D"),
("Francesco Corner",1656,1656,"D"),
("Bertuccio Valier",1656,1658,"D"),
("Giovanni Pesaro",1658,1659,"D"),
("Domenico II Contarini",1659,1675,"D"),
("Nicolo Sagredo",1675,1676,"D"),
("Luigi Contarini",1676,1684,"D"),
("Marcantonio Giustinian",1684,1688,"D"),
("Francesco Morosini",1688,1694,"D"),
("Silvestro Valier",1694,1700,"D"),
("Alvise II Mocenigo",1700,1709,"D"),
("Giovanni II Corner",1709,1722,"D"),
("Alvise III Mocenigo",1722,1732,"D"),
("Carlo Ruzzini",1732,1735,"D"),
("Alvise Pisani",1735,1741,"D"),
("Pietro Grimani",1741,1752,"D"),
("Francesco Loredan",1752,1762,"D"),
("Marco Foscarini",1762,1763,"D"),
("Alvise IV Mocenigo",1763,1778,"D"),
("Paolo Renier",1779,1789,"D"),
("Ludovico Manin",1789,1797,"D"),
]
