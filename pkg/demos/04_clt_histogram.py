"""Fluctuations of the centered eigenvalue statistic are Gaussian.

For f(z) = z^2 + 4 z^5 the centered statistic L_n(f) - mean should be
approximately N(0, 164) with 164 = 2*2*1^2 + 2*5*4^2 from the closed
form.  This desk-scale run uses a smaller order and fewer trials than
the headline experiment; rerun via the command line for full size, e.g.

    centrolab clt --n 1000 --trials 750 --f 0,0,1,0,0,4 --seed 1
    centrolab clt --n 4000 --trials 750 --f 0,0,1,0,0,4 --seed 1   # heavy
"""

import numpy as np

import centrolab as cl
from centrolab import io


def main():
    f = cl.Polynomial([0, 0, 1, 0, 0, 4])
    n, trials = 300, 400
    print(f"f(z) = {f.label()}, order {n}, {trials} trials")
    report = cl.run_clt(n, trials, f, dist="gaussian", master_seed=1)
    print(f"empirical variance:   {report.empirical_variance:.4f}")
    print(f"theoretical variance: {report.theoretical_variance:.4f}")
    print(f"KS distance to normal: {report.ks_statistic:.4f}")
    print(f"runtime: {report.runtime_seconds:.1f}s")

    out = io.write_histogram_csv("demo_clt_hist.csv", report.samples)
    print(f"\nhistogram written to {out}")
    std = np.sqrt(report.empirical_variance)
    edges = np.linspace(-2.5 * std, 2.5 * std, 11)
    counts, _ = np.histogram(report.samples, bins=edges)
    peak = counts.max()
    print("ascii histogram of the centered samples:")
    for i, c in enumerate(counts):
        bar = "#" * int(round(40 * c / peak))
        print(f"[{edges[i]:+8.1f}, {edges[i + 1]:+8.1f})  {bar}")


if __name__ == "__main__":
    main()
