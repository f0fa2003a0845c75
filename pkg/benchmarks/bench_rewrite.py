#!/usr/bin/env python3
"""Benchmark the rewriting kernels (compiled vs pure Python).

Workloads mirror the verification hot paths: resolving every length-3
overlap of the 25-generator presentation, and normal-forming the
degree-6 words behind the chiral span checks.  Each backend runs on a
fresh memo table over identical inputs.
"""

import time

from qmink import _nf_py
from qmink.algebra import overlap_words
from qmink.minkowski import minor_set
from qmink.scalars import ONE
from qmink.supergroup import build_slq41

try:
    from qmink import _nf_cy
except ImportError:
    _nf_cy = None

REPEAT = 3


def overlap_workload(pres):
    words = []
    for (a, b, c) in overlap_words(pres):
        words.append((a, b, c))
    return words


def degree4_workload(pres):
    minors = minor_set()
    words = []
    for ma in minors:
        for mb in minors:
            for w1 in ma.value.terms:
                for w2 in mb.value.terms:
                    words.append(w1 + w2)
    return words


def degree6_workload(pres):
    minors = minor_set()
    words = []
    for i in range(6):
        for j in range(3, 9):
            for k in range(8, 11):
                for w1 in minors[i].value.terms:
                    for w2 in minors[j].value.terms:
                        for w3 in minors[k].value.terms:
                            words.append(w1 + w2 + w3)
    return words


def run(kernel, pres, words):
    rules = pres._kernel_view()
    best = None
    for _ in range(REPEAT):
        memo = {}
        t0 = time.perf_counter()
        for w in words:
            kernel.nf_word(w, rules, pres.ngens, ONE, memo, pres.budget)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    pres = build_slq41()
    jobs = [
        ("overlap words (degree 3)", overlap_workload(pres)),
        ("minor pair products (degree 4)", degree4_workload(pres)),
        ("minor triple products (degree 6)", degree6_workload(pres)),
    ]
    backends = [("python", _nf_py)]
    if _nf_cy is not None:
        backends.append(("cython", _nf_cy))
    else:
        print("compiled kernel unavailable; benchmarking pure Python only")
    for label, words in jobs:
        print("%s: %d words" % (label, len(words)))
        times = {}
        for name, kernel in backends:
            times[name] = run(kernel, pres, words)
            print("  %-7s %8.1f ms" % (name, times[name] * 1e3))
        if len(times) == 2:
            print("  speedup %.2fx" % (times["python"] / times["cython"]))


if __name__ == "__main__":
    main()
