"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 verification
failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from . import oracle
from .decomposition import Decomposition, enumerate_pmcs
from .dp_connected import (
    CharacteristicStats,
    connected_feedback_vertex_set,
    connected_vertex_cover,
)
from .dp_treewidth import check_witness, solve_max_induced_tw
from .errors import BudgetExceeded, DisconnectedComplementError, PreconditionError, VerificationError
from .graph_classes import (
    ArcModel,
    ModelWitnessError,
    graph_from_arc_model,
    is_chordal,
    pmc_clique_partition,
    random_arc_model,
    random_chordal,
    separator_clique_partition,
)
from .graph_core import Graph, VertexSet, canonical_key, components, iter_bits, popcount
from .minsep import enumerate_minimal_separators, verify_power_theorem
from .reductions import BipartiteGraph, distance_d_independent_set, verify_appendix_lemma

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


class InputError(ValueError):
    pass


@dataclass
class RunReport:
    command: str
    input_digest: str | None = None
    parameters: dict = field(default_factory=dict)
    result_size: int | None = None
    witness: list[str] | None = None
    timing: float = 0.0
    counts: dict = field(default_factory=dict)
    verification: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> RunReport:
        return cls(**json.loads(text))


# ---------------------------------------------------------------- file formats


def parse_edge_list(text: str) -> tuple[Graph, list[str]]:
    """``u v`` per line, ``#`` comments; a lone label declares a vertex.

    Labels are numbered in order of first appearance.
    """
    labels: dict[str, int] = {}
    edges = []

    def vid(label: str) -> int:
        if label not in labels:
            labels[label] = len(labels)
        return labels[label]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith(("red:", "blue:")):
            continue
        parts = line.split()
        if len(parts) == 1:
            vid(parts[0])
        elif len(parts) == 2:
            if parts[0] == parts[1]:
                raise InputError(f"line {lineno}: self-loop on {parts[0]!r}")
            edges.append((vid(parts[0]), vid(parts[1])))
        else:
            raise InputError(f"line {lineno}: expected 'u v', got {raw!r}")
    names = sorted(labels, key=labels.get)
    return Graph.from_edges(len(names), edges), names


def parse_bipartite(text: str) -> tuple[BipartiteGraph, list[str]]:
    """Edge list plus ``red: ...`` and ``blue: ...`` role lines."""
    roles: dict[str, str] = {}
    declared = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        for role in ("red", "blue"):
            if line.startswith(role + ":"):
                for label in line[len(role) + 1:].split():
                    if roles.get(label, role) != role:
                        raise InputError(f"vertex {label!r} is both red and blue")
                    roles[label] = role
                    declared.append(label)
    body = "\n".join(declared) + "\n" + text
    g, names = parse_edge_list(body)
    missing = [v for v in names if v not in roles]
    if missing:
        raise InputError(f"vertices without a red/blue role: {missing}")
    reds = sum(1 << i for i, v in enumerate(names) if roles[v] == "red")
    try:
        return BipartiteGraph(g, reds, g.all & ~reds), names
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def format_edge_list(g: Graph, names: list[str] | None = None, header: str | None = None) -> str:
    names = names or [str(v) for v in range(g.n)]
    lines = [f"# {header}"] if header else []
    touched = 0
    for u, v in g.edges():
        lines.append(f"{names[u]} {names[v]}")
        touched |= 1 << u | 1 << v
    lines += [names[v] for v in range(g.n) if not touched >> v & 1]
    return "\n".join(lines) + "\n"


def _read(path: str) -> tuple[str, str]:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return data.decode("utf-8"), hashlib.sha256(data).hexdigest()


def load_graph(path: str) -> tuple[Graph, list[str], str]:
    text, digest = _read(path)
    g, names = parse_edge_list(text)
    return g, names, digest


def load_arc_model(path: str) -> tuple[ArcModel, str]:
    text, digest = _read(path)
    try:
        return ArcModel.from_json(json.loads(text)), digest
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid arc model {path}: {exc}") from exc


def _labels(mask: VertexSet, names: list[str]) -> list[str]:
    return [names[v] for v in iter_bits(mask)]


# ---------------------------------------------------------------- commands


def _cmd_seps(args) -> RunReport:
    g, names, digest = load_graph(args.file)
    seps = enumerate_minimal_separators(g, args.max_seps)
    rep = RunReport("seps", digest, {}, len(seps), counts={"n": g.n, "separators": len(seps)})
    if args.list:
        rep.counts["listing"] = [_labels(s, names) for s in seps]
    return rep


def _cmd_pmcs(args) -> RunReport:
    g, names, digest = load_graph(args.file)
    seps = enumerate_minimal_separators(g, args.max_seps)
    pmcs = sorted(enumerate_pmcs(g, seps, args.max_pmcs, args.max_seps), key=canonical_key)
    rep = RunReport(
        "pmcs", digest, {}, len(pmcs),
        counts={"n": g.n, "separators": len(seps), "pmcs": len(pmcs)},
    )
    if args.list:
        rep.counts["listing"] = [_labels(o, names) for o in pmcs]
    return rep


def _solve_tw(args, t: int, name: str) -> RunReport:
    g, names, digest = load_graph(args.file)
    decomp = None if t + 1 > g.n else Decomposition(g, args.max_seps, args.max_pmcs)
    size, F = solve_max_induced_tw(g, t, decomp)
    rep = RunReport(f"solve {name}", digest, {"t": t}, size, _labels(F, names))
    if decomp is not None:
        rep.counts = decomp.counts()
    small = t <= 1 or popcount(F) <= oracle.MAX_TW_CHECK
    rep.verification["treewidth_ok"] = check_witness(g, F, t) if small else None
    if rep.verification["treewidth_ok"] is False:
        raise VerificationError("returned set exceeds the treewidth bound")
    return rep


def _solve_connected(args) -> RunReport:
    problem = args.problem
    if args.graph_class == "circular-arc":
        model, digest = load_arc_model(args.file)
        g = graph_from_arc_model(model)
        names = [str(v) for v in range(g.n)]
    else:
        g, names, digest = load_graph(args.file)
        ok, _ = is_chordal(g)
        if not ok:
            raise InputError("input graph is not chordal")
        model = None
    decomp = Decomposition(g, args.max_seps, args.max_pmcs)
    if model is not None:
        sep_cliques = {s: separator_clique_partition(model, s) for s in decomp.separators if s}
        pmc_cliques = {o: pmc_clique_partition(model, o) for o in decomp.pmcs}
    else:
        sep_cliques = {s: [s] for s in decomp.separators if s}
        pmc_cliques = {o: [o] for o in decomp.pmcs}
    stats = CharacteristicStats()
    solver = connected_vertex_cover if problem == "cvc" else connected_feedback_vertex_set
    size, X = solver(g, sep_cliques=sep_cliques, pmc_cliques=pmc_cliques, decomp=decomp, stats=stats)
    rep = RunReport(
        f"solve {problem}", digest, {"class": args.graph_class}, size, _labels(X, names),
        counts={**decomp.counts(), "max_alpha_characteristics": stats.max_alpha_per_key,
                "max_beta_characteristics": stats.max_beta_per_key},
    )
    F = g.all & ~X
    rep.verification["complement_connected"] = g.is_connected_set(X)
    rep.verification["remainder_ok"] = check_witness(g, F, 0 if problem == "cvc" else 1)
    if not all(rep.verification.values()):
        raise VerificationError(f"{problem} solution failed verification")
    return rep


def _cmd_solve(args) -> RunReport:
    if args.problem == "tw-subgraph":
        if args.t is None:
            raise InputError("solve tw-subgraph needs --t")
        return _solve_tw(args, args.t, "tw-subgraph")
    if args.problem == "mis":
        return _solve_tw(args, 0, "mis")
    if args.problem == "mif":
        return _solve_tw(args, 1, "mif")
    if args.problem in ("cvc", "cfvs"):
        if args.graph_class is None:
            raise InputError(f"solve {args.problem} needs --class chordal|circular-arc")
        return _solve_connected(args)
    if args.problem == "dist-is":
        if args.d is None:
            raise InputError("solve dist-is needs --d")
        g, names, digest = load_graph(args.file)
        size, F = distance_d_independent_set(g, args.d, args.max_seps, args.max_pmcs)
        return RunReport("solve dist-is", digest, {"d": args.d}, size, _labels(F, names),
                         verification={"distances_ok": True})
    raise InputError(f"unknown problem {args.problem}")


def _cmd_verify(args) -> RunReport:
    if args.what == "theorem1":
        if args.k is None:
            raise InputError("verify theorem1 needs --k")
        g, names, digest = load_graph(args.file)
        report = verify_power_theorem(g, args.k, args.max_seps, args.threads)
        rep = RunReport(
            "verify theorem1", digest, {"k": args.k}, report.separators_power,
            counts={"separators_g": report.separators_g, "separators_power": report.separators_power},
            verification={"bound_holds": report.holds, "injective": report.injective,
                          "all_mapped": len(report.witness) == report.separators_power},
        )
        rep.counts["witness"] = [
            [_labels(sbar, names), _labels(s, names)] for sbar, s in report.witness.items()
        ]
        return rep
    text, digest = _read(args.file)
    b, _ = parse_bipartite(text)
    report = verify_appendix_lemma(b, args.max_seps)
    return RunReport(
        "verify appendix-lemma", digest, {}, report.separators_g_prime,
        counts={"separators_g": report.separators_g,
                "separators_g_prime": report.separators_g_prime,
                "vertices_g_prime": report.vertices_g_prime},
        verification={"bound_holds": report.holds},
    )


def _cmd_oracle(args) -> RunReport:
    g, names, digest = load_graph(args.file)
    problem = args.problem
    if problem == "seps":
        return RunReport("oracle seps", digest, {}, len(oracle.brute_minimal_separators(g)))
    if problem == "pmcs":
        return RunReport("oracle pmcs", digest, {}, len(oracle.brute_pmcs(g)))
    params = {}
    if problem == "tw":
        params["t"] = args.t if args.t is not None else 0
    if problem == "dist-is":
        if args.d is None:
            raise InputError("oracle dist-is needs --d")
        params["d"] = args.d
    if problem == "red-blue":
        text, _ = _read(args.file)
        b, names = parse_bipartite(text)
        g = b.graph
        params.update(reds=b.reds, blues=b.blues)
    size, witness = oracle.brute_solve_with_witness(g, problem, **params)
    size = None if size == float("inf") else size
    return RunReport(f"oracle {problem}", digest, {k: v for k, v in params.items()
                                                   if k in ("t", "d")},
                     size, None if witness is None else _labels(witness, names))


def _cmd_gen(args, out) -> None:
    if args.kind == "chordal":
        g = random_chordal(args.n, args.density, args.seed)
        out.write(format_edge_list(g, header=f"chordal n={args.n} density={args.density} seed={args.seed}"))
    else:
        model = random_arc_model(args.n, args.coverage, args.seed)
        out.write(json.dumps(model.to_json()) + "\n")


def _human(rep: RunReport) -> str:
    lines = [f"{rep.command}: {rep.result_size}"]
    if rep.command == "verify theorem1":
        c = rep.counts
        mapped = "all mapped" if rep.verification.get("all_mapped") else "NOT all mapped"
        lines = [f"{c['separators_power']} <= {c['separators_g']}, {mapped}"]
    elif rep.command == "verify appendix-lemma":
        c = rep.counts
        lines = [f"{c['separators_g_prime']} <= {c['separators_g']} + {c['vertices_g_prime']}"]
    if rep.witness is not None:
        lines.append("witness: " + " ".join(rep.witness))
    for key, value in rep.counts.items():
        if key in ("listing", "witness"):
            continue
        lines.append(f"{key}: {value}")
    for s in rep.counts.get("listing", []):
        lines.append("  {" + ", ".join(s) + "}")
    for key, value in rep.verification.items():
        lines.append(f"check {key}: {value}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON run report")
    common.add_argument("--max-seps", type=int, default=None, help="separator budget (default 10 n^3)")
    common.add_argument("--max-pmcs", type=int, default=None, help="PMC budget (default 20 n^3)")
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="sepdp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seps", parents=[common], help="enumerate minimal separators")
    p.add_argument("file")
    p.add_argument("--list", action="store_true")

    p = sub.add_parser("pmcs", parents=[common], help="enumerate potential maximal cliques")
    p.add_argument("file")
    p.add_argument("--list", action="store_true")

    p = sub.add_parser("solve", parents=[common], help="run an exact solver")
    p.add_argument("problem", choices=["tw-subgraph", "mis", "mif", "cvc", "cfvs", "dist-is"])
    p.add_argument("file")
    p.add_argument("--t", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--class", dest="graph_class", choices=["chordal", "circular-arc"])

    p = sub.add_parser("verify", parents=[common], help="check a structural bound")
    p.add_argument("what", choices=["theorem1", "appendix-lemma"])
    p.add_argument("file")
    p.add_argument("--k", type=int)

    p = sub.add_parser("gen", parents=[common], help="generate a random instance")
    p.add_argument("kind", choices=["chordal", "arcs"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--coverage", type=float, default=0.3)

    p = sub.add_parser("oracle", parents=[common], help="brute-force ground truth")
    p.add_argument("problem", choices=["seps", "pmcs", *oracle.PROBLEMS])
    p.add_argument("file")
    p.add_argument("--t", type=int)
    p.add_argument("--d", type=int)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "gen":
        try:
            _cmd_gen(args, out)
        except ValueError as exc:
            err.write(f"error: {exc}\n")
            return EXIT_INPUT
        return EXIT_OK
    handlers = {
        "seps": _cmd_seps,
        "pmcs": _cmd_pmcs,
        "solve": _cmd_solve,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
    }
    start = time.perf_counter()
    try:
        rep = handlers[args.command](args)
    except BudgetExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (VerificationError, ModelWitnessError) as exc:
        err.write(f"verification failure: {exc}\n")
        return EXIT_VERIFY
    except (InputError, PreconditionError, DisconnectedComplementError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    rep.timing = round(time.perf_counter() - start, 6)
    out.write(rep.to_json() + "\n" if args.json else _human(rep))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
