"""Command-line access to every engine capability.

Exit codes: 0 success, 1 data error (machine-readable code on stderr),
2 usage error.  Data goes to stdout only; diagnostics to stderr only.
The registry directory comes from ``--registry`` or the ``APS_REGISTRY``
environment variable (flag wins).

Query subcommands print exactly the bytes the HTTP service would return
for the same query, so scripted pipelines can switch between the two.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import TextIO

from . import queries, serialize
from .compare import QuadrantConfig
from .errors import ApsError, InvalidParameter
from .interactions import PruneConfig
from .registry import (
    Selection,
    add_result_set,
    export_metadata_csv,
    ingest_interactions,
    load_registry,
    save_registry,
    save_selection,
    utc_now_rfc3339,
)
from .space import MissingPolicy


class _UsageError(Exception):
    def __init__(self, status: int):
        self.status = status


class _Parser(argparse.ArgumentParser):
    """argparse that reports through injected streams instead of exiting."""

    def __init__(self, *args, err_stream: TextIO = sys.stderr, **kwargs):
        super().__init__(*args, **kwargs)
        self._err_stream = err_stream

    def exit(self, status: int = 0, message: str | None = None):
        if message:
            self._err_stream.write(message)
        raise _UsageError(status)

    def error(self, message: str):
        self._err_stream.write(f"{self.prog}: error: {message}\n")
        raise _UsageError(2)


def _build_parser(err_stream: TextIO) -> _Parser:
    parser = _Parser(prog="aps", err_stream=err_stream, description=__doc__)
    parser.add_argument("--registry", help="registry directory (default: $APS_REGISTRY)")
    sub = parser.add_subparsers(dest="command", required=True)

    def q(name: str, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p._err_stream = err_stream  # subparsers share the stream
        return p

    p = q("ingest-results", help="ingest a results CSV into the registry")
    p.add_argument("name")
    p.add_argument("file")
    p.add_argument("--overwrite", action="store_true")

    p = q("ingest-dataset", help="ingest an interactions file and register its metadata")
    p.add_argument("name")
    p.add_argument("file")
    p.add_argument("--k-core", type=int, default=5)
    p.add_argument("--coldstart-threshold", type=int, default=10)

    p = q("meta", help="list dataset metadata")
    p.add_argument("--datasets", help="comma-separated dataset ids")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    for name in ("project", "difficulty"):
        p = q(name, help=f"compute the 2D projection{' and difficulty' if name == 'project' else ' levels'}")
        p.add_argument("--metric", required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--algorithms", help="comma-separated algorithm ids (recomputes the space)")
        p.add_argument("--datasets", help="comma-separated dataset ids to show (no recompute)")
        p.add_argument(
            "--missing-policy",
            choices=tuple(mp.value for mp in MissingPolicy),
            default=MissingPolicy.DROP_DATASET.value,
        )
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = q("compare", help="pairwise algorithm comparison")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--metric", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--low-q", type=float, default=0.25)
    p.add_argument("--high-q", type=float, default=0.75)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = q("select-diverse", help="greedy farthest-point subset selection")
    p.add_argument("--metric", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--space", choices=("full", "pca"), default="full")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = q("save-selection", help="save a named dataset selection")
    p.add_argument("name")
    p.add_argument("--datasets", required=True, help="comma-separated dataset ids")
    p.add_argument("--note")
    p.add_argument("--overwrite", action="store_true")

    p = q("export", help="export dataset metadata CSV to stdout")
    p.add_argument("--datasets", help="comma-separated dataset ids")

    p = q("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ui-dir", help="directory of static UI files to serve at /")

    return parser


def _split_ids(raw: str | None) -> list[str] | None:
    if raw is None or raw == "":
        return None
    return [part for part in raw.split(",") if part]


def _registry_path(args: argparse.Namespace) -> str:
    path = args.registry or os.environ.get("APS_REGISTRY")
    if not path:
        raise InvalidParameter("no registry given (use --registry or set APS_REGISTRY)")
    return path


def run(argv: list[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser(err)
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return exc.status
    try:
        return _dispatch(args, out, err)
    except ApsError as exc:
        err.write(f"{exc.code}: {exc.message}\n")
        return 1
    except OSError as exc:
        err.write(f"io_error: {exc}\n")
        return 1


def _dispatch(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.command == "serve":
        from .service import serve

        serve(_registry_path(args), host=args.host, port=args.port, ui_dir=args.ui_dir)
        return 0

    registry_path = _registry_path(args)
    reg = load_registry(registry_path)

    if args.command == "ingest-results":
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
        reg = add_result_set(reg, args.name, text, overwrite=args.overwrite)
        save_registry(reg, registry_path)
        rs = reg.result_sets[args.name]
        err.write(
            f"ingested {args.name}: {len(rs)} records, "
            f"{len(rs.dataset_ids)} datasets, {len(rs.algorithm_ids)} algorithms\n"
        )
        return 0

    if args.command == "ingest-dataset":
        if args.k_core < 1 or args.coldstart_threshold < 1:
            raise InvalidParameter("k-core and coldstart-threshold must be >= 1")
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
        reg, meta = ingest_interactions(
            reg,
            args.name,
            text,
            prune=PruneConfig(k=args.k_core),
            coldstart_threshold=args.coldstart_threshold,
        )
        save_registry(reg, registry_path)
        err.write(
            f"ingested {args.name}: {meta.n_interactions} interactions after pruning, "
            f"{meta.n_users} users, {meta.n_items} items\n"
        )
        return 0

    if args.command == "meta":
        if args.format == "csv":
            out.write(export_metadata_csv(reg, _split_ids(args.datasets)))
        else:
            out.write(serialize.to_json(serialize.datasets_payload(reg)))
        return 0

    if args.command in ("project", "difficulty"):
        spec = queries.resolve_spec(args.metric, args.k)
        p, assignments = queries.query_projection(
            reg,
            spec,
            algorithms=_split_ids(args.algorithms),
            missing_policy=MissingPolicy(args.missing_policy),
        )
        if args.format == "csv":
            out.write(serialize.projection_csv(p, assignments))
        elif args.command == "project":
            visible = set(_split_ids(args.datasets) or []) or None
            out.write(serialize.to_json(serialize.projection_payload(p, assignments, visible)))
        else:
            out.write(serialize.to_json(serialize.difficulty_payload(spec, assignments)))
        return 0

    if args.command == "compare":
        spec = queries.resolve_spec(args.metric, args.k)
        try:
            cfg = QuadrantConfig(low_q=args.low_q, high_q=args.high_q)
        except ValueError as exc:
            raise InvalidParameter(str(exc)) from None
        cr = queries.query_compare(reg, spec, args.a, args.b, cfg)
        if args.format == "csv":
            out.write(serialize.compare_csv(cr))
        else:
            out.write(serialize.to_json(serialize.compare_payload(cr)))
        return 0

    if args.command == "select-diverse":
        spec = queries.resolve_spec(args.metric, args.k)
        space = queries.resolve_space(args.space)
        selected = queries.query_select(reg, spec, args.m, space)
        if args.format == "csv":
            out.write(serialize.selection_result_csv(selected))
        else:
            out.write(
                serialize.to_json(
                    serialize.selection_result_payload(spec, space.value, args.m, selected)
                )
            )
        return 0

    if args.command == "save-selection":
        ids = _split_ids(args.datasets)
        if not ids:
            raise InvalidParameter("--datasets must list at least one dataset id")
        sel = Selection(
            name=args.name,
            dataset_ids=tuple(ids),
            created_at=utc_now_rfc3339(),
            note=args.note,
        )
        reg = save_selection(reg, sel, overwrite=args.overwrite)
        save_registry(reg, registry_path)
        err.write(f"saved selection {args.name} ({len(sel.dataset_ids)} datasets)\n")
        return 0

    if args.command == "export":
        out.write(export_metadata_csv(reg, _split_ids(args.datasets)))
        return 0

    raise InvalidParameter(f"unknown command {args.command!r}")  # unreachable


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
