"""Time verify_all sequentially and with a process pool, and check that both
produce the same JSON payload."""

import argparse
import time

from exotic_series.verify import emit, verify_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()

    t0 = time.perf_counter()
    seq = verify_all()
    t1 = time.perf_counter()
    par = verify_all(workers=args.workers)
    t2 = time.perf_counter()
    print(emit(seq, "text"), end="")
    print(f"sequential {t1 - t0:.2f}s, {args.workers} workers {t2 - t1:.2f}s")
    print("identical payloads:", emit(seq, "json") == emit(par, "json"))


if __name__ == "__main__":
    main()
