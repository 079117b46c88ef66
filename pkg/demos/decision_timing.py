# Time the matrix-level shellability decision for simple 2-dimensional
# complexes and fit the log-log slope.
import time
import numpy as np
from brsc.instances import random_simple_dim2_matrix
from brsc.shelling import decide_shellable_matrix

sizes = [40, 60, 80, 120, 160, 240, 320]
med = []
for n in sizes:
    ts = []
    verdicts = []
    for r in range(7):
        m = random_simple_dim2_matrix(r, n)
        t0 = time.perf_counter()
        verdicts.append(decide_shellable_matrix(m))
        ts.append(time.perf_counter() - t0)
    med.append(np.median(ts))
    print(n, "rows", len(m.rows), "median %.5f s" % med[-1], "shellable", sum(verdicts), "/", len(verdicts))

slope = np.polyfit(np.log(sizes), np.log(med), 1)[0]
print("log-log slope: %.2f" % slope)
