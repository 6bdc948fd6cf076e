# benchmarks/catalog_sweep_benchmark.py

import argparse  # For command-line arguments
import json
import statistics  # For mean and median
import sys
import time

print("Starting benchmark script...")


# --- Try importing the package ---
# Assumes the script is run from the project root using 'uv run'
# or that planar_lie is installed in the environment
try:
    from planar_lie import PlanarLieClient, PlanarLieError
    from planar_lie.audit import parameter_sweep
    from planar_lie.expr import print_field

    print("planar_lie imported successfully.")
except ImportError as e:
    print(f"ERROR: Failed to import planar_lie: {e}")
    print(
        "Ensure you are running this script from the project root using 'uv run"
        " python benchmarks/catalog_sweep_benchmark.py'"
    )
    sys.exit(1)

# --- Configuration ---
DEFAULT_MAX_ORDER = 3
DEFAULT_REPEATS = 3


def parse_arguments():
    """Parses command-line arguments."""
    parser = argparse.ArgumentParser(description="planar-lie classification benchmark")
    parser.add_argument(
        "-m",
        "--max-order",
        type=int,
        default=DEFAULT_MAX_ORDER,
        help=f"Largest N / k swept for the graded families (default: {DEFAULT_MAX_ORDER})",
    )
    parser.add_argument(
        "-r",
        "--repeats",
        type=int,
        default=DEFAULT_REPEATS,
        help=f"Timed classifications per family (default: {DEFAULT_REPEATS})",
    )
    parser.add_argument(
        "--witness",
        action="store_true",
        help="Also build the witness chain for every classification.",
    )
    parser.add_argument(
        "--output",
        type=str,
        default=None,
        help="Optional path for the raw timings as JSON.",
    )
    return parser.parse_args()


# --- Helper Functions ---
def time_family(client, text, repeats, witness):
    """Classifies one algebra file `repeats` times and returns the timings in ms."""
    timings = []
    for _ in range(repeats):
        start = time.perf_counter()
        client.classification.classify(text, witness=witness)
        timings.append((time.perf_counter() - start) * 1000)
    return timings


# --- Main Execution ---
if __name__ == "__main__":
    args = parse_arguments()
    client = PlanarLieClient()

    print("\n--- Configuration ---")
    print(f"Max order: {args.max_order}")
    print(f"Repeats per family: {args.repeats}")
    print(f"Witness: {args.witness}")

    results = []
    failures = 0
    for fam in parameter_sweep(args.max_order):
        text = "".join(f"{print_field(v)}\n" for v in fam.generate().basis)
        label = f"{fam.tag} {json.dumps(fam.params_json())}"
        try:
            timings = time_family(client, text, args.repeats, args.witness)
        except PlanarLieError as e:
            failures += 1
            print(f"  FAILED {label}: {e.message}")
            continue
        results.append(
            {
                "family": label,
                "dim": fam.generate().dimension,
                "mean_ms": statistics.mean(timings),
                "median_ms": statistics.median(timings),
            }
        )
        print(f"  {label}: {statistics.mean(timings):.2f} ms")

    print("\n--- Summary ---")
    if results:
        means = [r["mean_ms"] for r in results]
        slowest = max(results, key=lambda r: r["mean_ms"])
        print(f"Families classified: {len(results)}")
        print(f"Average time: {statistics.mean(means):.2f} ms")
        print(f"Median time: {statistics.median(means):.2f} ms")
        print(f"Slowest: {slowest['family']} ({slowest['mean_ms']:.2f} ms)")
    print(f"Failures: {failures}")

    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            json.dump(results, f, indent=2)
        print(f"Timings written to {args.output}")

    print("\nBenchmark script finished.")
