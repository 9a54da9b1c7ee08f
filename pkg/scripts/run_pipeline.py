"""Run the full verification pipeline twice, time it, and compare JSON output."""

import sys
import time

from exotica.cli import RunConfig, run


def main() -> int:
    blobs = []
    for i in range(2):
        t0 = time.perf_counter()
        cert = run(RunConfig())
        blobs.append(cert.to_json())
        print(f"run {i + 1}: {cert.overall} with {len(cert.checks)} checks "
              f"in {time.perf_counter() - t0:.2f}s")
    for v in cert.failures():
        print(f"  FAIL {v.name} [{v.reason}] {v.detail}")
    same = blobs[0] == blobs[1]
    print("byte-identical json:", same)
    return 0 if cert.passed and same else 1


if __name__ == "__main__":
    sys.exit(main())
