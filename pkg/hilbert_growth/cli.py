"""Command line interface: ``hilbert-growth <command> ...``.

Every command produces a :class:`CommandResult`; ``main`` prints it as JSON
or text and exits with the code of its status. ``-`` as FILE reads stdin.
"""

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any, Callable, Dict, Iterable, List, Optional

from pydantic import BaseModel, Field
from tabulate import tabulate

from hilbert_growth import __version__
from hilbert_growth.binomial_calculus import (
    gotzmann_values,
    green_bound,
    hilbert_polynomial_from_expansion,
    is_o_sequence,
    macaulay_bound,
    macaulay_expand,
    mg_dimension,
)
from hilbert_growth.constructions import (
    build_plane_regime,
    build_prop_4_4,
    example_3_3,
    example_3_3_ideal,
    general_points,
)
from hilbert_growth.errors import (
    EXIT_CODES,
    STATUS_ALARM,
    STATUS_OK,
    HilbertGrowthError,
    HilbertGrowthValueError,
    TheoremViolationError,
    status_from_error,
)
from hilbert_growth.graded_ideals import (
    GradedSpan,
    base_locus_profile,
    is_form_list,
    minimal_generators,
    monomial_hilbert_function,
    read_forms,
    read_monomial_ideal,
    span_from_generators,
    span_from_monomial_ideal,
    write_forms,
    write_monomial_ideal,
)
from hilbert_growth.growth_classifier import Verdict, classify, classify_points
from hilbert_growth.plane_finder import find_plane
from hilbert_growth.point_geometry import (
    davis_decompose,
    h_vector,
    hf_points,
    read_points,
    write_points,
)
from hilbert_growth.utils import (
    logger,
    pydantic_dict,
    pydantic_json,
    resolve_jobs,
    resolve_seed,
)


class CommandLineError(HilbertGrowthValueError):
    DESCRIPTION = "Invalid command line"


class CommandResult(BaseModel):
    status: str = Field(description="ok, error, hypothesis_fail or alarm")
    command: str = Field(description="The command that ran")
    seed: int = Field(description="Seed of every random draw, echoed for reproducibility")
    payload: Dict[str, Any] = Field(default={}, description="The JSON document")
    human_text: str = Field("", description="Text rendering of the payload")
    file_text: Optional[str] = Field(
        None, description="File contents written by construct commands"
    )
    output_format: str = Field("json", description="json or text")

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CommandLineError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hilbert-growth", description="Hilbert function growth calculus")
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--jobs", type=int, default=None)
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    for name, args in (
        ("expand", ("K", "I")),
        ("bound", ("K", "I")),
        ("green", ("K", "I")),
        ("mg", ("K", "N")),
        ("persist", ("K", "N", "DMAX")),
    ):
        sub = commands.add_parser(name)
        for arg in args:
            sub.add_argument(arg, type=int)
    oseq = commands.add_parser("oseq")
    oseq.add_argument("H", type=int, nargs="+")

    ideal = commands.add_parser("ideal")
    ideal.add_argument("action", choices=["hf", "classify", "baselocus"])
    ideal.add_argument("FILE")
    ideal.add_argument("--n", type=int, required=True)
    ideal.add_argument("--window", type=int, default=None)

    points = commands.add_parser("points")
    points.add_argument("action", choices=["hf", "hvector", "classify", "davis", "plane"])
    points.add_argument("FILE")
    points.add_argument("--n", type=int, default=None)
    points.add_argument("--k", type=int, default=None)

    construct = commands.add_parser("construct")
    construct.add_argument("recipe", choices=["example33", "prop44", "planeregime", "general"])
    construct.add_argument("params", type=int, nargs="+")
    construct.add_argument("--out", default=None)

    for sub in (ideal, points, construct):
        sub.add_argument("--seed", type=int, default=None, dest="sub_seed")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def _map(function: Callable, items: Iterable, jobs: int) -> List:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [function(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, items))


def _require(value: Optional[int], flag: str) -> int:
    if value is None:
        raise CommandLineError(f"{flag} is required for this command")
    return value


def _params(values: List[int], names: List[str], recipe: str) -> List[int]:
    if len(values) != len(names):
        raise CommandLineError(f"{recipe} expects {' '.join(names)}")
    return values


def _calculator(args) -> Dict[str, Any]:
    if args.command == "expand":
        expansion = macaulay_expand(args.K, args.I)
        return {"k": args.K, "i": args.I, "expansion": str(expansion), "terms": expansion.terms}
    if args.command == "bound":
        return {"k": args.K, "i": args.I, "bound": macaulay_bound(args.K, args.I)}
    if args.command == "green":
        return {"k": args.K, "i": args.I, "bound": green_bound(args.K, args.I)}
    if args.command == "mg":
        return {"k": args.K, "n": args.N, "mg_dim": mg_dimension(args.K, args.N)}
    if args.command == "persist":
        polynomial = hilbert_polynomial_from_expansion(args.K, args.N)
        return {
            "k": args.K,
            "n": args.N,
            "values": gotzmann_values(args.K, args.N, args.DMAX),
            "polynomial": str(polynomial),
            "coefficients": polynomial.to_json(),
        }
    valid, index = is_o_sequence(args.H)
    return {"h": args.H, "valid": valid, "failure_index": index}


def _ideal_command(args, seed: int, jobs: int, log_level) -> Dict[str, Any]:
    text = _read_input(args.FILE)
    if args.window is not None and args.window < 1:
        raise CommandLineError("--window must be at least 1")
    window = args.n + (args.window if args.window is not None else 1)
    if is_form_list(text):
        num_vars, forms = read_forms(text)
        span = span_from_generators(forms, (0, window), num_vars=num_vars, log_level=log_level)
        values = span.hilbert_values().values
    else:
        ideal = read_monomial_ideal(text)
        values = _map(partial(monomial_hilbert_function, ideal), range(window + 1), jobs)
        span = None
    if args.action == "hf":
        return {"window": [0, window], "hilbert_function": values}
    if args.action == "classify":
        return pydantic_dict(classify(values, args.n))
    if span is None:
        span = span_from_monomial_ideal(ideal, (args.n, args.n))
    return pydantic_dict(
        base_locus_profile(span, args.n, extension=args.window, log_level=log_level)
    )


def _points_command(args, seed: int, jobs: int, log_level) -> Dict[str, Any]:
    points = read_points(_read_input(args.FILE))
    if args.action == "hf":
        if args.n is not None:
            degrees = [args.n]
        else:
            degrees = range(len(h_vector(points)) + 1)
        values = _map(partial(hf_points, points), degrees, jobs)
        return {"points": len(points), "hilbert_function": dict(zip(degrees, values))}
    if args.action == "hvector":
        return {"points": len(points), "h_vector": h_vector(points).values}
    n = _require(args.n, "--n")
    if args.action == "classify":
        return pydantic_dict(classify_points(points, n, seed=seed, log_level=log_level))
    k = _require(args.k, "--k")
    if args.action == "davis":
        _, _, _, report = davis_decompose(points, n, k)
        return pydantic_dict(report)
    return pydantic_dict(find_plane(points, n, k, seed=seed, log_level=log_level))


def _construct_command(args, seed: int) -> Dict[str, Any]:
    if args.recipe == "example33":
        (which,) = _params(args.params, ["WHICH"], "example33")
        if which == 4:
            span: GradedSpan = example_3_3(4, seed=seed)
            file_text = write_forms(minimal_generators(span), num_vars=3)
        else:
            file_text = write_monomial_ideal(example_3_3_ideal(which))
        payload = {"recipe": "example33", "which": which}
    elif args.recipe == "prop44":
        d, k, n, r = _params(args.params, ["D", "K", "N", "R"], "prop44")
        points, recipe = build_prop_4_4(d, k, n, r, seed=seed)
        file_text = write_points(points)
        payload = pydantic_dict(recipe)
    elif args.recipe == "planeregime":
        k, n, r = _params(args.params, ["K", "N", "R"], "planeregime")
        points, _, recipe = build_plane_regime(k, n, r, seed=seed)
        file_text = write_points(points)
        payload = pydantic_dict(recipe)
    else:
        m, r = _params(args.params, ["M", "R"], "general")
        points = general_points(m, r, seed=seed)
        file_text = write_points(points)
        payload = {"recipe": "general", "m": m, "r": r, "h_vector": h_vector(points).values}
    file_text = f"# seed {seed}\n" + file_text
    if args.out is not None:
        with open(args.out, "w") as f:
            f.write(file_text)
        payload["out"] = args.out
        file_text = None
    return {"payload": payload, "file_text": file_text}


def _status(payload: Dict[str, Any]) -> str:
    check = payload.get("check")
    if isinstance(check, dict) and check.get("verdict") == Verdict.failed.value:
        return STATUS_ALARM
    return STATUS_OK


def _render(payload: Dict[str, Any]) -> str:
    rows = []
    for key, value in payload.items():
        if isinstance(value, (dict, list)) and len(str(value)) > 60:
            value = str(value)[:57] + "..."
        rows.append([key, value])
    return tabulate(rows, tablefmt="plain")


def _asks_for_text(argv: List[str]) -> bool:
    # errors raised before parsing still honour --format text
    pairs = zip(argv, argv[1:])
    return "--format=text" in argv or any(a == "--format" and b == "text" for a, b in pairs)


def run(argv: List[str]) -> CommandResult:
    """Parse ``argv`` and run the command; errors become statuses, never exceptions."""

    seed = resolve_seed()
    command = argv[0] if argv else ""
    output_format = "text" if _asks_for_text(argv) else "json"
    try:
        args = _build_parser().parse_args(argv)
        command = args.command
        output_format = args.format
        sub_seed = getattr(args, "sub_seed", None)
        seed = resolve_seed(sub_seed if sub_seed is not None else args.seed)
        jobs = resolve_jobs(args.jobs)
        log_level = logging.DEBUG
        if args.verbose:
            if not logger.handlers:
                logger.addHandler(logging.StreamHandler(sys.stderr))
            logger.setLevel(logging.INFO)
            log_level = logging.INFO
        file_text = None
        if command == "ideal":
            payload = _ideal_command(args, seed, jobs, log_level)
        elif command == "points":
            payload = _points_command(args, seed, jobs, log_level)
        elif command == "construct":
            result = _construct_command(args, seed)
            payload, file_text = result["payload"], result["file_text"]
        else:
            payload = _calculator(args)
        return CommandResult(
            status=_status(payload),
            command=command,
            seed=seed,
            payload=payload,
            human_text=_render(payload),
            file_text=file_text,
            output_format=output_format,
        )
    except (HilbertGrowthError, ValueError, OSError) as e:
        payload = {"error": str(e)}
        if isinstance(e, TheoremViolationError):
            payload["context"] = e.context
        return CommandResult(
            status=status_from_error(e),
            command=command,
            seed=seed,
            payload=payload,
            human_text=str(e),
            output_format=output_format,
        )


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if "--version" in argv:
        print(__version__)
        return 0
    result = run(argv)
    if result.file_text is not None:
        sys.stdout.write(result.file_text)
    elif result.output_format == "json":
        print(pydantic_json(result))
    else:
        print(result.human_text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
