"""Command-line entry point: ``python -m app.main <subcommand> ...``."""

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel

from .algebra.partition import SchurPartition
from .algebra.schur_ring import ClosureCheck, SchurRing, product_closure_witness
from .algebra.symbolic import check_symbolic_closure, w_algebra
from .automorphisms import aut_sring, aut_symbolic_lattice_sring, realize_group, sring_isomorphisms
from .config import get_settings, override_settings
from .constructions import (
    construction_registry,
    conv_pair,
    enumerate_cyclic_srings,
    exhaustive_srings,
    symbolic_lattice_sring,
)
from .groups.cyclic_product import CyclicProductGroup
from .ptuple.charlattice import char_lattice
from .services.reports import (
    FORMATS,
    aut_report,
    classes_report,
    closure_report,
    conv_pair_report,
    enumeration_report,
    lattice_report,
    lattice_sring_report,
    realization_report,
    render,
    sring_report,
)
from .services.reproduction import ReproductionService
from .utils.exceptions import CapExceededError, SchurRingError, SpecParseError, VerificationError
from .utils.logging import configure_logging, get_logger
from .utils.parsers import (
    load_json,
    parse_field,
    parse_group,
    parse_params,
    parse_partition,
    parse_signature,
    parse_tuple,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2


class UsageError(SpecParseError):
    """Raised by the argument parser instead of exiting the process."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(message, error_code="USAGE")


# -- subcommands -------------------------------------------------------------

def cmd_classes(args: argparse.Namespace) -> BaseModel:
    return classes_report(parse_group(args.group))


def cmd_charlattice(args: argparse.Namespace) -> BaseModel:
    sig = parse_signature(args.signature)
    return lattice_report(char_lattice(sig), name=sig.describe())


def cmd_latsring(args: argparse.Namespace) -> BaseModel:
    sig = parse_signature(args.signature)
    nodes = [parse_tuple(t) for t in args.nodes.split(";") if t.strip()] if args.nodes else []
    S = symbolic_lattice_sring(sig, nodes)
    aut = aut_symbolic_lattice_sring(S) if args.aut else None
    return lattice_sring_report(S, aut)


def cmd_construct(args: argparse.Namespace) -> BaseModel:
    group = parse_group(args.group)
    params = parse_params(args.param or [])
    S = construction_registry.build(args.construction, group, parse_field(args.field), params)
    return sring_report(S)


def _symbolic_vectors(source: str) -> List[Dict[tuple, Fraction]]:
    data = load_json(source)
    if not isinstance(data, list) or not all(isinstance(v, dict) for v in data):
        raise SpecParseError("vectors must be a JSON array of {tuple: coefficient} objects",
                             error_code="BAD_VECTORS")
    return [{parse_tuple(k): Fraction(str(c)) for k, c in v.items()} for v in data]


def cmd_check(args: argparse.Namespace) -> BaseModel:
    if args.vectors:
        sig = parse_signature(args.group)
        result = check_symbolic_closure(w_algebra(sig), _symbolic_vectors(args.vectors), basis=args.basis)
        return closure_report(sig.describe(), result)
    if not args.partition:
        raise UsageError("check needs --partition or --vectors", error_code="USAGE")
    group = parse_group(args.group)
    partition = SchurPartition(group, parse_partition(args.partition, group), check=False)
    problem = partition.violation()
    if problem is not None:
        return closure_report(group.describe(), ClosureCheck(False, problem))
    witness = product_closure_witness(partition, parse_field(args.field))
    if witness is not None:
        return closure_report(group.describe(), ClosureCheck(False, "block products are not closed",
                                                             details=witness))
    return closure_report(group.describe(), ClosureCheck(True, details={"dimension": partition.size}))


def cmd_aut(args: argparse.Namespace) -> BaseModel:
    group = parse_group(args.group)
    S = SchurRing.from_blocks(group, parse_partition(args.partition, group), parse_field(args.field))
    return aut_report(S, aut_sring(S))


def cmd_enumerate_cyclic(args: argparse.Namespace) -> BaseModel:
    group = CyclicProductGroup.cyclic(args.n)
    field = parse_field(args.field)
    if args.exhaustive:
        srings = exhaustive_srings(group, field)
    else:
        srings = enumerate_cyclic_srings(args.n)
    return enumeration_report(group, srings)


def cmd_realize(args: argparse.Namespace) -> BaseModel:
    crosscheck = {"auto": None, "yes": True, "no": False}[args.crosscheck]
    return realization_report(realize_group(parse_group(args.group), args.p, crosscheck=crosscheck))


def cmd_conv_pair(args: argparse.Namespace) -> BaseModel:
    pair = conv_pair(parse_group(args.group), parse_field(args.field))
    isomorphisms = sring_isomorphisms(pair.first, pair.second)
    if not isomorphisms:
        raise VerificationError("no isomorphism between the pair was found")
    return conv_pair_report(pair, len(isomorphisms))


COMMANDS: Dict[str, Callable[[argparse.Namespace], BaseModel]] = {
    "classes": cmd_classes,
    "charlattice": cmd_charlattice,
    "latsring": cmd_latsring,
    "construct": cmd_construct,
    "check": cmd_check,
    "aut": cmd_aut,
    "enumerate-cyclic": cmd_enumerate_cyclic,
    "realize": cmd_realize,
    "conv-pair": cmd_conv_pair,
}


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    common = _Parser(add_help=False)
    common.add_argument("--field", default="Q", help="coefficient field: Q or F<prime>")
    common.add_argument("--cap-group-order", type=int, help="largest group order accepted")
    common.add_argument("--cap-blocks", type=int, help="largest number of basic sets for automorphism searches")
    common.add_argument("--format", choices=FORMATS, default="json", dest="fmt")
    common.add_argument("--out", type=Path, help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, help="worker processes for suites")
    common.add_argument("--log-level", help=f"log level (default {settings.log_level})")
    common.add_argument("--log-format", choices=("console", "json"))

    parser = _Parser(prog="sring", description=settings.app_name)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classes", parents=[common], help="automorphism classes of an abelian group")
    p.add_argument("group")

    p = sub.add_parser("charlattice", parents=[common], help="characteristic-subgroup lattice of an abelian p-group")
    p.add_argument("signature", help="p=<prime>;lambda=<l1>,<l2>,...")

    p = sub.add_parser("latsring", parents=[common], help="symbolic lattice S-ring spanned by R(a) over given nodes")
    p.add_argument("signature")
    p.add_argument("--nodes", help="semicolon-separated tuples, e.g. 'R(0,1);R(1,2)'")
    p.add_argument("--aut", action="store_true", help="also compute the automorphism group")

    p = sub.add_parser("construct", parents=[common], help="build an S-ring with a named construction")
    p.add_argument("construction", choices=construction_registry.list_constructions())
    p.add_argument("group")
    p.add_argument("--param", action="append", help="key=value (JSON values) or one JSON object")

    p = sub.add_parser("check", parents=[common], help="test a partition or a symbolic span for closure")
    p.add_argument("group")
    p.add_argument("--partition", help="JSON blocks or a path to them")
    p.add_argument("--vectors", help="JSON list of {tuple: coefficient} for a p=<prime>;lambda=... group")
    p.add_argument("--basis", choices=("R", "O"), default="R")

    p = sub.add_parser("aut", parents=[common], help="automorphism group of an S-ring")
    p.add_argument("group")
    p.add_argument("partition", help="JSON blocks or a path to them")

    p = sub.add_parser("enumerate-cyclic", parents=[common], help="all S-rings over Z_n")
    p.add_argument("n", type=int)
    p.add_argument("--exhaustive", action="store_true", help="brute-force search instead of the recursive one")

    p = sub.add_parser("realize", parents=[common], help="realize a group as Aut of a rational S-ring")
    p.add_argument("group")
    p.add_argument("--p", type=int, default=3, help="odd prime of the host p-group")
    p.add_argument("--crosscheck", choices=("auto", "yes", "no"), default="auto")

    p = sub.add_parser("conv-pair", parents=[common], help="two distinct Cayley-isomorphic S-rings")
    p.add_argument("group")

    p = sub.add_parser("reproduce", parents=[common], help="reproduce worked examples by id")
    p.add_argument("examples", nargs="*", help="example ids, or 'all' (the default)")
    p.add_argument("--list", action="store_true", help="list the example ids and exit")
    return parser


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _reproduce(args: argparse.Namespace) -> int:
    service = ReproductionService(jobs=args.jobs)
    if args.list:
        _emit("".join(f"{e}\t{service.describe(e)}\n" for e in service.list_examples()), args.out)
        return EXIT_OK
    ids = service.list_examples() if not args.examples or args.examples == ["all"] else args.examples
    reports = service.reproduce_all(ids)
    if args.fmt == "dot":
        raise UsageError("reproduction reports have no DOT rendering", error_code="USAGE")
    if len(reports) == 1:
        text = render(reports[0], args.fmt)
    elif args.fmt == "json":
        text = "[\n" + ",\n".join(r.model_dump_json(indent=2) for r in reports) + "\n]\n"
    else:
        text = "".join(render(r, args.fmt) for r in reports)
    _emit(text, args.out)
    failed = [r.example_id for r in reports if not r.passed]
    if failed:
        logger.error("reproduction_failed", examples=failed)
        return EXIT_VERIFICATION
    return EXIT_OK


def run(argv: Sequence[str]) -> int:
    """Parse ``argv``, run the subcommand and return the exit code."""
    try:
        args = build_parser().parse_args(list(argv))
        override_settings(cap_group_order=args.cap_group_order, cap_blocks=args.cap_blocks, jobs=args.jobs)
        configure_logging(args.log_level, args.log_format)
        if args.command == "reproduce":
            return _reproduce(args)
        report = COMMANDS[args.command](args)
        _emit(render(report, args.fmt), args.out)
        return EXIT_OK
    except (SpecParseError, CapExceededError) as exc:
        sys.stderr.write(f"error: {exc.message}\n")
        return EXIT_USAGE
    except SchurRingError as exc:
        sys.stderr.write(f"error: {exc.message}\n")
        logger.error("command_failed", error=exc.message, error_code=exc.error_code, details=str(exc.details))
        return EXIT_VERIFICATION


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
