"""Two transcriptions of the closed degree formulas, measured against the general one.

The residual degree for s - g = 2, 3 has closed forms in the symmetric
functions of the degrees.  This script evaluates the classical transcription
("classical") and a corrected one on complete intersections and on the twisted
cubic, and reports which agrees with the general coefficient formula.
"""
from collections import Counter

from reshilb.verify import calibration_instances

rows = calibration_instances()
tally = Counter()
print(f"{'source':34s} {'g':>2} {'degrees':18s} {'general':>8} {'classical':>8} {'corrected':>9}")
for r in rows:
    dl = len(r["degrees"]) - r["g"]
    tally[(dl, "classical")] += r["classical"] == r["engine"]
    tally[(dl, "corrected")] += r["corrected"] == r["engine"]
    tally[(dl, "total")] += 1
    print(f"{r['source']:34s} {r['g']:>2} {str(r['degrees']):18s} {r['engine']:>8} "
          f"{r['classical']:>8} {r['corrected']:>9}")
print()
for dl in (2, 3):
    n = tally[(dl, "total")]
    print(f"s - g = {dl}: classical matches {tally[(dl, 'classical')]}/{n}, "
          f"corrected matches {tally[(dl, 'corrected')]}/{n}")
