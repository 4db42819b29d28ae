"""Command line front end.

Subcommands: ``score`` (index a labeled CSV), ``kmeans`` (cluster a CSV and
index the winning partition), ``sweep-beta`` (allocation fairness sweep),
``reversal-curve`` (analytic vs numeric two-cluster reversal), and
``gauss-demo`` (canonical mixture scenarios through the full pipeline).

Exit codes: 0 success, 2 input error, 3 computation degeneracy.  Output is
deterministic byte for byte given identical flags and seed.  JSON reports
carry a ``schema_version``; CSV output serializes floats with 17
significant digits.
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from .baselines import calinski_harabasz, cluster_size_entropy, davies_bouldin, silhouette_score
from .cluster import KMeansConfig, best_of_restarts
from .datasets import (
    CANONICAL_SCENARIOS,
    AllocationScenario,
    build_allocation_dataset,
    canonical_mixture,
    format_float,
    read_labeled_csv,
    sample_mixture,
)
from .errors import (
    CsvFormatError,
    DegenerateGeometryError,
    DegenerateRescaleError,
    GenerationError,
)
from .geometry import bsi_of_labeled_data, cluster_geometries, geometric_distribution
from .index import bsi, frequency_distribution, reversal_bsi_closed_form

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_DEGENERATE = 3
SCHEMA_VERSION = 1

_DEFAULT_FORMAT = {
    "score": "json",
    "kmeans": "json",
    "gauss-demo": "json",
    "sweep-beta": "csv",
    "reversal-curve": "csv",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsindex",
        description="Density-balance index for labeled point sets.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument(
        "--format",
        choices=("json", "csv"),
        default=None,
        help="report format (default: json for reports, csv for series)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", parents=[common], help="index an already-labeled CSV")
    p.add_argument("input_csv", help="CSV with a header row")
    p.add_argument(
        "--label-column",
        default="label",
        help="label column name or 0-based index (default: label)",
    )

    p = sub.add_parser("kmeans", parents=[common], help="cluster a CSV, index the best run")
    p.add_argument("input_csv", help="CSV with a header row; all feature columns numeric")
    p.add_argument("--k", type=int, required=True, help="number of clusters")
    p.add_argument("--restarts", type=int, default=10, help="independent restarts (default 10)")
    p.add_argument(
        "--objective",
        choices=("bsi", "inertia"),
        default="bsi",
        help="restart selection rule (default bsi)",
    )
    p.add_argument(
        "--label-column",
        default=None,
        help="column to exclude from the features (name or 0-based index)",
    )
    p.add_argument("--with-baselines", action="store_true", help="add the four baseline metrics")
    p.add_argument(
        "--labels-out",
        metavar="PATH",
        help="write winning cluster ids here (default: <out>.labels.csv when --out is set)",
    )

    p = sub.add_parser("sweep-beta", parents=[common], help="allocation fairness sweep")
    p.add_argument(
        "--p-pop",
        default="0.950,0.049,0.001",
        help="comma-separated population shares (default 0.950,0.049,0.001)",
    )
    p.add_argument(
        "--beta-grid",
        nargs=3,
        metavar=("LO", "HI", "STEPS"),
        default=["-1", "1", "41"],
        help="sweep grid (default -1 1 41)",
    )
    p.add_argument("--n", type=int, default=500000, help="points per grid value (default 500000)")

    p = sub.add_parser("reversal-curve", parents=[common], help="two-cluster reversal table")
    p.add_argument("--steps", type=int, default=201, help="alpha grid size (default 201)")

    p = sub.add_parser("gauss-demo", parents=[common], help="canonical mixture scenarios")
    p.add_argument("--scenario", choices=CANONICAL_SCENARIOS, required=True)
    p.add_argument("--n", type=int, default=900, help="sample size (default 900)")
    p.add_argument("--k", type=int, default=3, help="number of clusters (default 3)")
    p.add_argument("--restarts", type=int, default=20, help="independent restarts (default 20)")
    p.add_argument(
        "--objective",
        choices=("bsi", "inertia"),
        default="bsi",
        help="restart selection rule (default bsi)",
    )
    p.add_argument(
        "--points-out",
        metavar="PATH",
        help="write the point cloud here (default: <out>.points.csv when --out is set)",
    )
    return parser


def _labeled_report(command, points, labels, k, config_echo, seed, *, mapping=None):
    p = frequency_distribution(labels, k)
    q = geometric_distribution(points, labels, k)
    report = bsi(p, q)
    per_cluster = [
        {
            "cluster_id": g.cluster_id,
            "member_count": g.member_count,
            "singular_values": [float(v) for v in g.singular_values],
            "volume": g.volume,
            "extent": g.extent,
        }
        for g in cluster_geometries(points, labels, k)
    ]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "seed": seed,
        "config_echo": config_echo,
        "dataset_summary": {"n": int(points.shape[0]), "d": int(points.shape[1]), "k": int(k)},
        "bsi_report": {
            "bsi": report.bsi,
            "jsd_bits": report.jsd_bits,
            "kl_p_m_bits": report.kl_p_m_bits,
            "kl_q_m_bits": report.kl_q_m_bits,
            "k": report.k,
        },
        "frequency": [float(v) for v in p],
        "geometric": [float(v) for v in q],
        "per_cluster": per_cluster,
    }
    if mapping is not None:
        doc["label_mapping"] = {str(key): int(v) for key, v in mapping.items()}
    return doc


def _flat_summary(doc):
    row = {
        "command": doc["command"],
        "n": doc["dataset_summary"]["n"],
        "d": doc["dataset_summary"]["d"],
        "k": doc["dataset_summary"]["k"],
        "bsi": doc["bsi_report"]["bsi"],
        "jsd_bits": doc["bsi_report"]["jsd_bits"],
        "kl_p_m_bits": doc["bsi_report"]["kl_p_m_bits"],
        "kl_q_m_bits": doc["bsi_report"]["kl_q_m_bits"],
    }
    if "kmeans" in doc:
        row["inertia"] = doc["kmeans"]["inertia"]
        row["restart_index"] = doc["kmeans"]["restart_index"]
    for name, value in (doc.get("baselines") or {}).items():
        row[name] = value
    return row


def _emit(doc, args, fmt):
    if fmt == "json":
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        row = _flat_summary(doc)
        writer.writerow(list(row))
        writer.writerow([_cell(v) for v in row.values()])
        text = buf.getvalue()
    _write_text(args.out, text)


def _cell(value):
    if isinstance(value, float):
        return format_float(value)
    return value


def _write_text(out, text):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_rows(out, header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _write_text(out, buf.getvalue())


def _derived_path(out, suffix):
    if out is None:
        return None
    stem = out[: -len(".json")] if out.endswith(".json") else out
    return f"{stem}.{suffix}"


def _cmd_score(args, fmt):
    points, labels, mapping = read_labeled_csv(args.input_csv, args.label_column)
    doc = _labeled_report(
        "score",
        points,
        labels,
        len(mapping),
        {"input_csv": args.input_csv, "label_column": str(args.label_column)},
        args.seed,
        mapping=mapping,
    )
    _emit(doc, args, fmt)
    return EXIT_OK


def _read_feature_csv(path, label_column):
    if label_column is None:
        with open(path, "r", newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise CsvFormatError("empty CSV: no header row") from None
            rows = []
            for line_no, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != len(header):
                    raise CsvFormatError(
                        f"expected {len(header)} fields, found {len(row)}", line=line_no
                    )
                values = []
                for j, cell in enumerate(row):
                    try:
                        values.append(float(cell))
                    except ValueError:
                        raise CsvFormatError(
                            f"non-numeric feature value {cell!r}", line=line_no, column=j + 1
                        ) from None
                rows.append(values)
        if not rows:
            raise CsvFormatError("CSV has a header but no data rows")
        return np.asarray(rows, dtype=float)
    points, _, _ = read_labeled_csv(path, label_column)
    return points


def _cmd_kmeans(args, fmt):
    points = _read_feature_csv(args.input_csv, args.label_column)
    config = KMeansConfig(k=args.k, restarts=args.restarts, seed=args.seed)
    result = best_of_restarts(points, config, objective=args.objective)
    doc = _labeled_report(
        "kmeans",
        points,
        result.assignments,
        args.k,
        {
            "input_csv": args.input_csv,
            "label_column": None if args.label_column is None else str(args.label_column),
            "k": args.k,
            "restarts": args.restarts,
            "objective": args.objective,
        },
        args.seed,
    )
    doc["kmeans"] = {
        "inertia": result.inertia,
        "iterations_used": result.iterations_used,
        "restart_index": result.restart_index,
        "sizes": np.bincount(result.assignments, minlength=args.k).tolist(),
    }
    if args.with_baselines:
        doc["baselines"] = _baseline_panel(points, result.assignments, args.k)
    labels_out = args.labels_out or _derived_path(args.out, "labels.csv")
    if labels_out:
        _write_rows(
            labels_out,
            ["row", "cluster"],
            [[i, int(c)] for i, c in enumerate(result.assignments)],
        )
    _emit(doc, args, fmt)
    return EXIT_OK


def _baseline_panel(points, labels, k):
    return {
        "silhouette": silhouette_score(points, labels, k),
        "calinski_harabasz": calinski_harabasz(points, labels, k),
        "davies_bouldin": davies_bouldin(points, labels, k),
        "cluster_size_entropy": cluster_size_entropy(labels, k),
    }


def _cmd_sweep_beta(args, fmt):
    shares = [float(v) for v in args.p_pop.split(",") if v.strip() != ""]
    lo, hi = float(args.beta_grid[0]), float(args.beta_grid[1])
    steps = int(args.beta_grid[2])
    if steps < 2:
        raise ValueError(f"beta grid needs at least 2 steps, got {steps}")
    if lo > hi:
        raise ValueError(f"beta grid start {lo} exceeds end {hi}")
    if lo < -1.0 or hi > 1.0:
        raise ValueError(f"beta grid [{lo}, {hi}] must lie inside [-1, 1]")
    k = len(shares)
    betas = np.linspace(lo, hi, steps)
    rows = []
    failures = 0
    for beta in betas:
        scenario = AllocationScenario(p_pop=shares, beta=float(beta), n_total=args.n, seed=args.seed)
        r = scenario.r
        try:
            dataset = build_allocation_dataset(scenario)
            report = bsi_of_labeled_data(dataset.points, dataset.labels, dataset.k)
            rows.append(
                [format_float(beta), format_float(report.bsi), format_float(report.jsd_bits)]
                + [format_float(v) for v in r]
            )
        except (GenerationError, DegenerateRescaleError, DegenerateGeometryError) as exc:
            failures += 1
            print(f"sweep-beta: beta={beta:g} failed: {exc}", file=sys.stderr)
            rows.append([format_float(beta), "", ""] + [format_float(v) for v in r])
    if failures == len(betas):
        raise GenerationError("every grid point failed")
    header = ["beta", "bsi", "jsd_bits"] + [f"r_{i + 1}" for i in range(k)]
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "sweep-beta",
            "seed": args.seed,
            "config_echo": {
                "p_pop": shares,
                "beta_grid": [lo, hi, steps],
                "n": args.n,
            },
            "columns": header,
            "rows": [[None if cell == "" else cell for cell in row] for row in rows],
        }
        _write_text(args.out, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        _write_rows(args.out, header, rows)
    return EXIT_OK


def _cmd_reversal_curve(args, fmt):
    if args.steps < 2:
        raise ValueError(f"steps must be >= 2, got {args.steps}")
    alphas = np.linspace(0.0, 1.0, args.steps)
    rows = []
    worst = 0.0
    for alpha in alphas:
        analytic = reversal_bsi_closed_form(float(alpha))
        numeric = bsi([alpha, 1.0 - alpha], [1.0 - alpha, alpha]).bsi
        worst = max(worst, abs(analytic - numeric))
        rows.append([format_float(alpha), format_float(analytic), format_float(numeric)])
    rows.append(["max_abs_diff", format_float(worst), ""])
    header = ["alpha", "bsi_analytic", "bsi_numeric"]
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "reversal-curve",
            "config_echo": {"steps": args.steps},
            "columns": header,
            "rows": rows[:-1],
            "max_abs_diff": worst,
        }
        _write_text(args.out, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        _write_rows(args.out, header, rows)
    return EXIT_OK


def _cmd_gauss_demo(args, fmt):
    spec = canonical_mixture(args.scenario, n_total=args.n, seed=args.seed)
    dataset = sample_mixture(spec)
    config = KMeansConfig(k=args.k, restarts=args.restarts, seed=args.seed)
    result = best_of_restarts(dataset.points, config, objective=args.objective)
    doc = _labeled_report(
        "gauss-demo",
        dataset.points,
        result.assignments,
        args.k,
        {
            "scenario": args.scenario,
            "n": args.n,
            "k": args.k,
            "restarts": args.restarts,
            "objective": args.objective,
        },
        args.seed,
    )
    doc["kmeans"] = {
        "inertia": result.inertia,
        "iterations_used": result.iterations_used,
        "restart_index": result.restart_index,
        "sizes": np.bincount(result.assignments, minlength=args.k).tolist(),
    }
    doc["scenario"] = {
        "name": args.scenario,
        "component_sizes": np.bincount(dataset.labels, minlength=dataset.k).tolist(),
    }
    points_out = args.points_out or _derived_path(args.out, "points.csv")
    if points_out:
        _write_rows(
            points_out,
            [f"x{j + 1}" for j in range(dataset.d)] + ["component", "cluster"],
            [
                [format_float(v) for v in row] + [int(comp), int(clus)]
                for row, comp, clus in zip(dataset.points, dataset.labels, result.assignments)
            ],
        )
    _emit(doc, args, fmt)
    return EXIT_OK


_HANDLERS = {
    "score": _cmd_score,
    "kmeans": _cmd_kmeans,
    "sweep-beta": _cmd_sweep_beta,
    "reversal-curve": _cmd_reversal_curve,
    "gauss-demo": _cmd_gauss_demo,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or _DEFAULT_FORMAT[args.command]
    try:
        return _HANDLERS[args.command](args, fmt)
    except (CsvFormatError, ValueError, OSError) as exc:
        print(f"bsindex {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except DegenerateGeometryError as exc:
        print(f"bsindex {args.command}: degenerate geometry: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (DegenerateRescaleError, GenerationError) as exc:
        print(f"bsindex {args.command}: degenerate computation: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
