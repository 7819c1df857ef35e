import collections, random, statistics, sys, os, csv, io
from gen import match, FIRST, TOPONYM_WIVES, SURNAMELESS, ALIASES, canon
from tiers import TIERS, VARIANT_SPELLING

SOFT_BOTH = {"Candiano","Memmo","Dandolo","Ziani","Morosini","Mocenigo","Malipiero","Loredan","Grimani","Donato","Venier","Contarini"}

def census_fams(fam, married):
    mf = {fam[i] for i in married}
    uf = {fam[i] for i in range(len(fam)) if i not in married}
    return mf, uf

def finish(doges, fam, usable, assign, rng, outdir):
    kept_doges = {d for d, _, _ in assign}
    need = 80 - len(kept_doges)
    pool = [i for i in range(len(doges)) if usable[i] and i not in kept_doges]
    best = None
    for it in range(20000):
        extra = set(rng.sample(pool, need))
        married = kept_doges | extra
        mf, uf = census_fams(fam, married)
        bothf = mf & uf
        s = abs(len(mf) - 39) + abs(len(uf) - 37) + 2 * len(bothf ^ SOFT_BOTH)
        if "Ziani" not in {fam[i] for i in extra}: s += 5
        if best is None or s < best[0]:
            best = (s, extra)
            if s == 0: break
    score, extra = best
    print("census soft score", score, file=sys.stderr)
    married = sorted(kept_doges | extra)
    # reign durations: sum 749, median 7.5 over the married doges
    adjust_reigns(doges, married, rng)
    recs = [(d[0], d[1], d[2]) for d in doges]
    wives = []  # (name, start, end, doge index)
    used_first = collections.Counter()
    def first():
        f = FIRST[len(wives) % len(FIRST)]
        return f
    spelled = collections.Counter()
    for d, f, w in sorted(assign, key=lambda x: doges[x[0]][1]):
        spelled[w] += 1
        sur = VARIANT_SPELLING.get(w, w) if spelled[w] == 1 else w
        wives.append((f"{first()} {sur}", doges[d][1], doges[d][2], d))
    extras = sorted(extra, key=lambda i: doges[i][1])
    top = list(TOPONYM_WIVES); nol = list(SURNAMELESS)
    for k, i in enumerate(extras):
        f = fam[i]
        if f == "Ziani" and "Cecilia" in nol:
            nol.remove("Cecilia"); name = "Cecilia"
        elif doges[i][1] < 1200 and nol:
            name = nol.pop(0)
        elif k % 3 == 0 and top:
            name = top.pop(0)
        else:
            name = f"{first()} {doges[i][0].split()[-1]}"
        wives.append((name, doges[i][1], doges[i][2], i))
    wives.sort(key=lambda w: (w[1], w[0]))
    got = match(recs, [(w[0], w[1], w[2]) for w in wives])
    bad = [(w[0], doges[w[3]][0], doges[g][0]) for w, g in zip(wives, got) if g != w[3]]
    if bad: print("MISMATCH", bad, file=sys.stderr)
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "doges.csv"), "w", newline="") as fh:
        wr = csv.writer(fh, lineterminator="\n"); wr.writerow(["name", "tenure_start", "tenure_end"])
        for d in doges: wr.writerow([d[0], d[1], d[2]])
    with open(os.path.join(outdir, "dogaresse.csv"), "w", newline="") as fh:
        wr = csv.writer(fh, lineterminator="\n"); wr.writerow(["name", "tenure_start", "tenure_end"])
        for w in wives: wr.writerow([w[0], w[1], w[2]])
    with open(os.path.join(outdir, "aliases.csv"), "w", newline="") as fh:
        wr = csv.writer(fh, lineterminator="\n"); wr.writerow(["variant", "canonical"])
        for a, b in ALIASES: wr.writerow([a, b])
    allf = sorted(set(TIERS))
    with open(os.path.join(outdir, "families.csv"), "w", newline="") as fh:
        wr = csv.writer(fh, lineterminator="\n"); wr.writerow(["family", "tier"])
        for f in allf: wr.writerow([f, TIERS[f]])
    dur = sorted(doges[i][2] - doges[i][1] for i in married)
    print("married", len(married), "sum", sum(dur), "median", statistics.median(dur), "mean", sum(dur) / len(dur), file=sys.stderr)

def adjust_reigns(doges, married, rng):
    def durs(): return sorted(doges[i][2] - doges[i][1] for i in married)
    # move the median pair to 7/8 first, then fix the total using long reigns
    for _ in range(500):
        d = durs()
        if d[39] == 7 and d[40] == 8: break
        if d[39] > 7:
            # shorten one reign of length 8..9 to 7
            c = [i for i in married if 8 <= doges[i][2] - doges[i][1] <= 10]
            i = rng.choice(c); doges[i][2] = doges[i][1] + 7
        elif d[40] < 8:
            c = [i for i in married if 5 <= doges[i][2] - doges[i][1] <= 7]
            i = rng.choice(c); doges[i][2] = doges[i][1] + 8
        else:
            break
    diff = 749 - sum(durs())
    longs = sorted(married, key=lambda i: -(doges[i][2] - doges[i][1]))
    k = 0
    while diff != 0:
        i = longs[k % 12]; step = 1 if diff > 0 else -1
        doges[i][2] += step; diff -= step; k += 1
