"""Time the compiled word kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends are checked to return identical results before timing.
"""

import argparse
import random
import sys
import timeit

from loopbraid._kernels import compiled_kernels, python_kernels


def workloads(rng):
    n = 6
    # image length grows exponentially in the number of sigmas; 60 keeps it
    # around a thousand letters
    codes = [4 * rng.randrange(n - 1) + rng.randrange(3) for _ in range(60)]
    codes += [4 * rng.randrange(n) + 3 for _ in range(10)]
    rng.shuffle(codes)
    letters = [rng.choice((1, -1)) * rng.randint(1, n) for _ in range(20000)]
    images = [tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(30)) for _ in range(n)]
    word = [rng.choice((1, -1)) * rng.randint(1, n) for _ in range(2000)]
    return {
        "evaluate_codes (n=6, 70 tokens)": lambda k: k.evaluate_codes(n, codes),
        "reduce_letters (20000 letters)": lambda k: k.reduce_letters(letters),
        "substitute (2000 letters, 30-letter images)": lambda k: k.substitute(images, word),
        "conjugate_letters (20000 by 2000)": lambda k: k.conjugate_letters(letters, word),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if compiled_kernels is None:
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return 1
    jobs = workloads(random.Random(args.seed))
    print(f"{'kernel':<45} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, job in jobs.items():
        if job(python_kernels) != job(compiled_kernels):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        times = []
        for k in (python_kernels, compiled_kernels):
            t = timeit.Timer(lambda: job(k))
            loops, _ = t.autorange()
            best = min(t.repeat(args.repeat, loops)) / loops
            times.append(best * 1e3)
        print(f"{name:<45} {times[0]:>10.3f} {times[1]:>10.3f} {times[0] / times[1]:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
