#  License: Apache Software License 2.0

"""The ``diagentropy`` command line.

Every subcommand reads model documents from files and writes deterministic text, so its output can be compared
verbatim. Exit codes:

- 0: success
- 1: invalid model or invalid arguments
- 2: unreadable or malformed document
- 3: at least one identity failed verification
- 4: an observation contradicts every remaining condition during ``diagnose``
"""
import argparse
import json
import logging
import sys
import warnings
from contextlib import redirect_stderr, redirect_stdout
from typing import IO, List, Optional, Sequence

from diagentropy.documents import export_dot, format_number, read_model, read_tree, serialize_model, serialize_tree
from diagentropy.entropy import (
    hb_partition,
    jb_information,
    shannon_information,
    shannon_partition_entropy,
)
from diagentropy.exceptions import (
    ContradictoryObservationException,
    InvalidArgumentsException,
    InvalidModelException,
    ParseException,
)
from diagentropy.model import DiagnosisModel, Partition, partition_for, refine_partition
from diagentropy.oracle import InstanceSpec, check_identities, generate_instance
from diagentropy.planner import (
    CriteriaComparison,
    Criterion,
    CriterionKind,
    DecisionNode,
    PlanReport,
    PlanStep,
    build_tree,
    compare_criteria,
    diagnose_step,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_VERIFICATION_FAILED = 3
EXIT_CONTRADICTION = 4

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise InvalidArgumentsException(f'{self.prog}: {message}')


def _add_model_flags(parser: argparse.ArgumentParser):
    parser.add_argument(
        '--lambda', dest='lambda_', type=int, default=None, help='alphabet size of a CSV model, inferred when omitted'
    )
    parser.add_argument('--renormalize', action='store_true', help='rescale the priors so they sum to one')


def _model_options() -> argparse.ArgumentParser:
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument('model', help='path of a JSON or CSV model document')
    _add_model_flags(options)
    return options


def _measure_options() -> argparse.ArgumentParser:
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument('--measure', choices=['shannon', 'cb', 'both'], default='both')
    options.add_argument('--base', type=int, default=None, help='logarithm base, the alphabet size by default')
    options.add_argument(
        '--after', default=None, help='comma separated symptoms observed before, by name or zero-based index'
    )
    return options


def build_parser() -> argparse.ArgumentParser:
    """Returns the argument parser of the command line."""
    parser = _ArgumentParser(
        prog='diagentropy',
        description='Plan diagnoses by combinatorial-probabilistic and Shannon information.',
    )
    parser.add_argument('-v', '--verbose', action='store_true', help='log debug records to the error stream')
    subparsers = parser.add_subparsers(dest='command', metavar='command', parser_class=_ArgumentParser)
    subparsers.required = True

    model, measure = _model_options(), _measure_options()

    subparsers.add_parser('validate', parents=[model], help='validate a model document')
    subparsers.add_parser('entropy', parents=[model, measure], help='print the entropy of a partition')

    info = subparsers.add_parser('info', parents=[model, measure], help='print the information of a symptom')
    info.add_argument('--symptom', required=True, help='symptom name or zero-based index')

    plan = subparsers.add_parser('plan', parents=[model], help='build a diagnosis tree and print its ledger')
    plan.add_argument('--criterion', choices=['cb', 'shannon'], default='cb')
    plan.add_argument('--base', type=int, default=None, help='logarithm base of the Shannon criterion')
    plan.add_argument('--out', default=None, help='write the tree document to this path')
    plan.add_argument('--dot', default=None, help='write the tree as a DOT graph to this path')

    diagnose = subparsers.add_parser('diagnose', help='walk a diagnosis tree by entering observed symptom values')
    diagnose.add_argument('tree', help='path of a tree document built over the model')
    diagnose.add_argument('model', help='path of a JSON or CSV model document')
    _add_model_flags(diagnose)

    verify = subparsers.add_parser('verify', parents=[model], help='verify the entropy identities on a model')
    verify.add_argument('--trials', type=int, default=100)
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--json', dest='json_path', default=None, help='write the report as JSON to this path')

    subparsers.add_parser('compare', parents=[model], help='compare the trees built under both criteria')

    gen = subparsers.add_parser('gen', help='print a random model document')
    gen.add_argument('--n', type=int, required=True, help='number of conditions')
    gen.add_argument('--t', type=int, required=True, help='number of symptoms')
    gen.add_argument('--lambda', dest='lambda_', type=int, default=2, help='alphabet size')
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--prior', choices=['uniform', 'random'], default='random')
    return parser


def _read(args: argparse.Namespace) -> DiagnosisModel:
    return read_model(args.model, lambda_=args.lambda_, renormalize=args.renormalize)


def _observed(model: DiagnosisModel, after: Optional[str]) -> List[int]:
    if not after:
        return []
    return [model.symptom_index(reference.strip()) for reference in after.split(',')]


def _given(model: DiagnosisModel, partition: Partition) -> str:
    if not partition.inducing_symptoms:
        return ''
    return ' given ' + ','.join(model.matrix.symptom_names[r] for r in partition.inducing_symptoms)


def _base(model: DiagnosisModel, base: Optional[int]) -> int:
    return model.alphabet.size if base is None else base


def _validate(args: argparse.Namespace, out: IO[str]) -> int:
    model = _read(args)
    out.write(
        f'valid model: {model.condition_count} conditions, {model.symptom_count} symptoms, '
        f'lambda {model.alphabet.size}\n'
    )
    return EXIT_OK


def _entropy(args: argparse.Namespace, out: IO[str]) -> int:
    model = _read(args)
    partition = partition_for(model, _observed(model, args.after))
    given = _given(model, partition)
    if args.measure in ('shannon', 'both'):
        base = _base(model, args.base)
        value = shannon_partition_entropy(partition, model, base)
        out.write(f'shannon entropy{given} (base {base}): {format_number(float(value))}\n')
    if args.measure in ('cb', 'both'):
        out.write(f'combinatorial entropy{given}: {format_number(float(hb_partition(partition)))}\n')
    return EXIT_OK


def _info(args: argparse.Namespace, out: IO[str]) -> int:
    model = _read(args)
    before = partition_for(model, _observed(model, args.after))
    symptom = model.symptom_index(args.symptom)
    after = refine_partition(before, model, symptom)
    name, given = model.matrix.symptom_names[symptom], _given(model, before)
    if args.measure in ('shannon', 'both'):
        base = _base(model, args.base)
        value = shannon_information(before, after, model, base)
        out.write(f'shannon information of {name}{given} (base {base}): {format_number(float(value))}\n')
    if args.measure in ('cb', 'both'):
        value = jb_information(before, after)
        out.write(f'combinatorial information of {name}{given}: {format_number(float(value))}\n')
    return EXIT_OK


def _write_steps(steps: Sequence[PlanStep], report: PlanReport, out: IO[str]):
    for step in steps:
        conditions = ','.join(report.condition_names[i] for i in step.block)
        out.write(
            f'  {step.step}. {step.symptom_name} on {{{conditions}}}: information '
            f'{format_number(step.information)}, residual entropy {format_number(step.residual_entropy)}\n'
        )


def _write_report(report: PlanReport, out: IO[str]):
    out.write(f'criterion: {report.criterion.kind.value}\n')
    out.write(f'initial entropy: {format_number(report.initial_entropy)}\n')
    out.write('ledger:\n')
    _write_steps(report.steps, report, out)
    out.write(f'total information: {format_number(report.total_information)}\n')
    out.write('most probable path:\n')
    _write_steps(report.path_steps, report, out)
    out.write(f'expected test count: {format_number(report.expected_test_count)}\n')
    out.write(f'worst case depth: {report.worst_case_depth}\n')
    out.write(f'residual entropy: {format_number(report.residual_entropy)}\n')
    out.write(f'resolved leaves: {report.resolved_leaves}\n')
    out.write(f'ambiguous leaves: {report.ambiguous_leaves}\n')


def _plan(args: argparse.Namespace, out: IO[str]) -> int:
    model = _read(args)
    tree, report = build_tree(model, Criterion.parse(args.criterion, shannon_base=args.base))
    _write_report(report, out)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as file:
            file.write(serialize_tree(tree) + '\n')
    if args.dot:
        with open(args.dot, 'w', encoding='utf-8') as file:
            file.write(export_dot(tree) + '\n')
    return EXIT_OK


def _read_value(name: str, alphabet_size: int, stdin: IO[str], out: IO[str], err: IO[str]) -> int:
    while True:
        out.write(f'value of {name}: ')
        out.flush()
        line = stdin.readline()
        if line == '':
            raise ParseException(f"input ended before a value of '{name}' was entered")
        try:
            value = int(line.strip())
        except ValueError:
            value = None
        if value is not None and 0 <= value < alphabet_size:
            return value
        err.write(f"invalid value '{line.strip()}'. Please enter an integer in [0, {alphabet_size - 1}].\n")


def _diagnose(args: argparse.Namespace, stdin: IO[str], out: IO[str], err: IO[str]) -> int:
    model = _read(args)
    tree = read_tree(args.tree, model)

    node = tree.root
    while isinstance(node, DecisionNode):
        value = _read_value(tree.symptom_names[node.symptom], tree.alphabet_size, stdin, out, err)
        node = diagnose_step(tree, node, value)

    names = [tree.condition_names[i] for i in node.block]
    out.write(f'\ndiagnosis: {",".join(names)} ({node.status.value})\n')
    for name, posterior in sorted(zip(names, node.posterior), key=lambda item: (-item[1], item[0])):
        out.write(f'  {name}: {format_number(posterior)}\n')
    return EXIT_OK


def _verify(args: argparse.Namespace, out: IO[str]) -> int:
    model = _read(args)
    report = check_identities(model, trials=args.trials, seed=args.seed)
    for check in report.checks:
        out.write(
            f"{'PASS' if check.passed else 'FAIL'} {check.identity}: {check.checks} checks, "
            f'{check.violations} violations\n'
        )
    out.write(f'{len(report.checks) - len(report.failures)} of {len(report.checks)} identities hold\n')
    if args.json_path:
        with open(args.json_path, 'w', encoding='utf-8') as file:
            json.dump(report.to_dict(), file, sort_keys=True, indent=2)
            file.write('\n')
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def _write_comparison(comparison: CriteriaComparison, out: IO[str]):
    for kind in (CriterionKind.COMBINATORIAL, CriterionKind.SHANNON):
        report = comparison.reports[kind]
        out.write(
            f'{kind.value}: expected test count {format_number(report.expected_test_count)}, '
            f'worst case depth {report.worst_case_depth}, ambiguous leaves {report.ambiguous_leaves}\n'
        )
    if comparison.optimal_expected_test_count is None:
        out.write('optimal expected test count: not computed\n')
    else:
        out.write(f'optimal expected test count: {format_number(comparison.optimal_expected_test_count)}\n')
    out.write(f"same tree: {'yes' if comparison.same_tree() else 'no'}\n")


def _compare(args: argparse.Namespace, out: IO[str]) -> int:
    _write_comparison(compare_criteria(_read(args)), out)
    return EXIT_OK


def _gen(args: argparse.Namespace, out: IO[str]) -> int:
    spec = InstanceSpec(n=args.n, t=args.t, lambda_=args.lambda_, prior=args.prior, seed=args.seed)
    out.write(serialize_model(generate_instance(spec)) + '\n')
    return EXIT_OK


def _dispatch(args: argparse.Namespace, stdin: IO[str], out: IO[str], err: IO[str]) -> int:
    if args.command == 'diagnose':
        return _diagnose(args, stdin, out, err)
    handlers = {
        'validate': _validate,
        'entropy': _entropy,
        'info': _info,
        'plan': _plan,
        'verify': _verify,
        'compare': _compare,
        'gen': _gen,
    }
    return handlers[args.command](args, out)


def run_cli(
    argv: Sequence[str],
    stdin: Optional[IO[str]] = None,
    stdout: Optional[IO[str]] = None,
    stderr: Optional[IO[str]] = None,
) -> int:
    """Runs the command line on an argument list and returns the exit code.

    Parameters
    ----------
    argv: Sequence[str]
        The arguments, without the program name.
    stdin: IO[str], default=None
        The stream ``diagnose`` reads observed values from. Defaults to ``sys.stdin``.
    stdout: IO[str], default=None
        The stream results are written to. Defaults to ``sys.stdout``.
    stderr: IO[str], default=None
        The stream errors, warnings and verbose log records are written to. Defaults to ``sys.stderr``.

    Returns
    -------
    exit_code: int
    """
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = build_parser().parse_args(list(argv))
    except InvalidArgumentsException as exc:
        stderr.write(f'error: {exc}\n')
        return EXIT_INVALID
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)

    package_logger = logging.getLogger('diagentropy')
    handler = None
    if args.verbose:
        handler = logging.StreamHandler(stderr)
        handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
        package_logger.addHandler(handler)
        package_logger.setLevel(logging.DEBUG)
    logger.debug(f"running command '{args.command}'")

    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            try:
                return _dispatch(args, stdin, stdout, stderr)
            finally:
                for warning in caught:
                    stderr.write(f'warning: {warning.message}\n')
    except (InvalidModelException, InvalidArgumentsException) as exc:
        stderr.write(f'error: {exc}\n')
        return EXIT_INVALID
    except ParseException as exc:
        stderr.write(f'error: {exc}\n')
        return EXIT_PARSE
    except OSError as exc:
        stderr.write(f'error: {exc}\n')
        return EXIT_PARSE
    except ContradictoryObservationException as exc:
        stderr.write(f'\nerror: {exc}\n')
        return EXIT_CONTRADICTION
    finally:
        if handler is not None:
            package_logger.removeHandler(handler)
            package_logger.setLevel(logging.NOTSET)


def main():
    """Entry point of the ``diagentropy`` console script."""
    sys.exit(run_cli(sys.argv[1:]))
