''' The qmul command line: estimate | sweep | verify | presets

Exit codes: 0 success, 1 the physical model failed, 2 usage error.
Results go to standard output (or --output), logs to standard error.
'''
import io
import csv
import sys
import json
import logging
import argparse
import typing as t
import dataclasses
from qmul.spec import QmulError, InvalidArgument, InvalidCombination, ModelError
from qmul.arith.spec import ALGORITHMS, MODES, DEFAULT_KARATSUBA_THRESHOLD, MultiplySpec
from qmul.qec.estimate import estimate
from qmul.platforms import QubitParams, list_presets, resolve_platform, default_scheme
from qmul.settings import EstimatorConfig, load_config
from qmul.sim.verify import Exhaustive, Random, verify_multiplier
from qmul.access.sweep import FIG1_BITS, FIG2_BITS, ALL_ALGORITHMS, ResultRow, TallyKey, tallies, run_sweep
from qmul.access.report import write_csv, write_json

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_MODEL, EXIT_USAGE = 0, 1, 2

class UsageError(InvalidArgument):
  pass

def _csv_list(value: str) -> t.List[str]:
  return [item.strip() for item in value.split(',') if item.strip()]

def _int_list(value: str) -> t.List[int]:
  try:
    return [int(item) for item in _csv_list(value)]
  except ValueError:
    raise argparse.ArgumentTypeError(f"expected comma separated integers, got {value!r}")

def geometric_range(start: int, stop: int, factor: int) -> t.List[int]:
  if start < 1 or factor < 2 or stop < start:
    raise UsageError('--bits-range needs 1 <= FROM <= TO and FACTOR >= 2')
  sizes, n = [], start
  while n <= stop:
    sizes.append(n)
    n *= factor
  return sizes

def _add_build_args(parser: argparse.ArgumentParser):
  parser.add_argument('--mode', choices=MODES, default='qc', help='qc: c is a classical constant, qq: c is a quantum register')
  parser.add_argument('--threshold', type=int, default=DEFAULT_KARATSUBA_THRESHOLD, help='karatsuba base case width')
  parser.add_argument('--window', type=int, default=None, help='windowed lookup width (default: chosen by cost model)')

def _add_estimate_args(parser: argparse.ArgumentParser):
  parser.add_argument('--code', choices=('surface', 'floquet'), default=None, help='QEC scheme (default: floquet on Majorana platforms, surface otherwise)')
  parser.add_argument('--budget', type=float, default=None, help='total error budget')
  parser.add_argument('--format', choices=('csv', 'json'), default='csv')
  parser.add_argument('--output', default=None, help='write results to this file instead of standard output')

def build_parser() -> argparse.ArgumentParser:
  parser = argparse.ArgumentParser(prog='qmul', description='Resource estimates for quantum plus-equal multiplication')
  parser.add_argument('-v', '--verbose', action='store_true', help='log at debug level')
  parser.add_argument('--config', default=None, help='flat key = value file overriding estimator constants')
  commands = parser.add_subparsers(dest='command', required=True)

  est = commands.add_parser('estimate', help='estimate one (algorithm, n, platform) cell')
  est.add_argument('--algo', choices=ALGORITHMS, required=True)
  est.add_argument('--bits', type=int, required=True)
  est.add_argument('--platform', default='gate_ns_e3', help='preset name or parameter file')
  _add_build_args(est)
  _add_estimate_args(est)

  sweep = commands.add_parser('sweep', help='estimate a grid of cells')
  sweep.add_argument('--algos', type=_csv_list, default=list(ALL_ALGORITHMS))
  bits = sweep.add_mutually_exclusive_group()
  bits.add_argument('--bits', type=_int_list, default=None)
  bits.add_argument('--bits-range', type=int, nargs=3, metavar=('FROM', 'TO', 'FACTOR'), default=None)
  bits.add_argument('--fig1', action='store_true', help='all algorithms, n = 8 .. 8192 on gate_ns_e3')
  bits.add_argument('--fig2', action='store_true', help='all algorithms, n = 2048 on every preset')
  sweep.add_argument('--platforms', type=_csv_list, default=None)
  sweep.add_argument('--workers', type=int, default=1)
  _add_build_args(sweep)
  _add_estimate_args(sweep)

  verify = commands.add_parser('verify', help='check a builder by simulation')
  verify.add_argument('--algo', choices=ALGORITHMS, required=True)
  verify.add_argument('--bits', type=int, required=True)
  how = verify.add_mutually_exclusive_group()
  how.add_argument('--exhaustive', action='store_true')
  how.add_argument('--samples', type=int, default=None)
  verify.add_argument('--seed', type=int, default=0)
  verify.add_argument('--workers', type=int, default=1)
  verify.add_argument('--format', choices=('text', 'json'), default='text')
  _add_build_args(verify)

  presets = commands.add_parser('presets', help='list the qubit platform presets')
  presets.add_argument('--format', choices=('csv', 'json'), default='csv')
  return parser

def _config(args) -> EstimatorConfig:
  config = load_config(args.config)
  if getattr(args, 'budget', None) is not None:
    config = dataclasses.replace(config, budget=dataclasses.replace(config.budget, total=args.budget))
  return config

def _emit(args, data: bytes, stdout: t.BinaryIO):
  if getattr(args, 'output', None):
    with open(args.output, 'wb') as fw:
      fw.write(data)
  else:
    stdout.write(data)
    stdout.flush()

def _render(args, rows: t.List[ResultRow]) -> bytes:
  return write_json(rows) if args.format == 'json' else write_csv(rows)

def cmd_estimate(args, stdout: t.BinaryIO) -> int:
  config = _config(args)
  params = resolve_platform(args.platform, config.presets)
  code = args.code or default_scheme(params)
  scheme = config.schemes[code]
  if not scheme.supports(params):
    raise InvalidCombination(f"the {code} scheme does not run on {params.name} ({params.family})", stage='estimate')
  tally = tallies(TallyKey(args.algo, args.bits, args.mode, args.threshold, args.window))
  result = estimate(
    tally, params, scheme, config.budget,
    cycle_model=config.cycles,
    t_states_per_toffoli=config.t_states_per_toffoli,
    distance_cap=config.distance_cap,
    factory_max_rounds=config.factory_max_rounds,
  )
  row = ResultRow(args.algo, args.bits, args.mode, params.name, code, tally, result)
  _emit(args, _render(args, [row]), stdout)
  return EXIT_OK

def _sweep_grid(args, config: EstimatorConfig) -> t.Tuple[t.List[str], t.List[int], t.List[QubitParams]]:
  platforms = args.platforms
  if args.fig1:
    bit_sizes, platforms = list(FIG1_BITS), platforms or ['gate_ns_e3']
  elif args.fig2:
    bit_sizes, platforms = list(FIG2_BITS), platforms or list(config.presets)
  elif args.bits_range:
    bit_sizes = geometric_range(*args.bits_range)
  elif args.bits:
    bit_sizes = args.bits
  else:
    raise UsageError('sweep needs --bits, --bits-range, --fig1 or --fig2')
  if any(n < 1 for n in bit_sizes) or any(b <= a for a, b in zip(bit_sizes, bit_sizes[1:])):
    raise UsageError('bit sizes must be positive and strictly increasing')
  algorithms = args.algos
  if not algorithms: raise UsageError('sweep needs at least one algorithm')
  for algorithm in algorithms:
    if algorithm not in ALGORITHMS: raise UsageError(f"unknown algorithm {algorithm!r}")
  platforms = platforms or ['gate_ns_e3']
  return algorithms, bit_sizes, [resolve_platform(name, config.presets) for name in platforms]

def cmd_sweep(args, stdout: t.BinaryIO) -> int:
  config = _config(args)
  algorithms, bit_sizes, platforms = _sweep_grid(args, config)
  rows = run_sweep(
    algorithms, bit_sizes, platforms,
    mode=args.mode,
    code=args.code,
    karatsuba_threshold=args.threshold,
    window=args.window,
    config=config,
    workers=args.workers,
  )
  _emit(args, _render(args, rows), stdout)
  failed = [row for row in rows if row.error]
  for row in failed:
    logger.warning(f"{row.algorithm} n={row.n} {row.platform}: {row.error}")
  return EXIT_MODEL if rows and len(failed) == len(rows) else EXIT_OK

def cmd_verify(args, stdout: t.BinaryIO) -> int:
  spec = MultiplySpec(args.algo, args.bits, args.mode, args.threshold, args.window)
  strategy = Exhaustive() if args.exhaustive else Random(args.samples or 1000, args.seed)
  report = verify_multiplier(spec, strategy, workers=args.workers)
  if args.format == 'json':
    data = json.dumps(report.to_dict(), indent=2) + '\n'
  else:
    lines = [f"cases={report.cases} failures={len(report.failures)} ancilla_violations={report.ancilla_violations}"]
    lines += [f"a0={a0} b={b} c={c} got={got} expected={expected}" for a0, b, c, got, expected in report.failures]
    data = '\n'.join(lines) + '\n'
  _emit(args, data.encode(), stdout)
  return EXIT_OK if report.ok else EXIT_MODEL

PRESET_HEADER = ('name', 'platform', 'family', 't_one_qubit', 't_two_qubit', 't_meas', 'e_one_qubit', 'e_two_qubit', 'e_meas', 't_inject_error', 'schemes')

def cmd_presets(args, stdout: t.BinaryIO) -> int:
  config = _config(args)
  entries = list_presets(config.presets)
  if args.format == 'json':
    data = json.dumps([
      dict(info.params.to_dict(), platform=info.platform, schemes=list(info.schemes))
      for info in entries
    ], indent=2) + '\n'
  else:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(PRESET_HEADER)
    for info in entries:
      params = info.params.to_dict()
      writer.writerow([
        info.name, info.platform, info.params.family,
        *(f"{params[field]:g}" for field in PRESET_HEADER[3:-1]),
        ';'.join(info.schemes),
      ])
    data = buffer.getvalue()
  stdout.write(data.encode())
  stdout.flush()
  return EXIT_OK

commands = {
  'estimate': cmd_estimate,
  'sweep': cmd_sweep,
  'verify': cmd_verify,
  'presets': cmd_presets,
}

def main(argv: t.Optional[t.Sequence[str]] = None, stdout: t.Optional[t.BinaryIO] = None) -> int:
  parser = build_parser()
  try:
    args = parser.parse_args(argv)
  except SystemExit as exc:
    return exc.code if isinstance(exc.code, int) else EXIT_USAGE
  logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
  stdout = stdout or sys.stdout.buffer
  try:
    return commands[args.command](args, stdout)
  except ModelError as err:
    print(f"qmul {args.command}: model failure {err}", file=sys.stderr)
    return EXIT_MODEL
  except InvalidArgument as err:
    print(f"qmul {args.command}: {err}", file=sys.stderr)
    return EXIT_USAGE
  except QmulError as err:
    logger.debug('unexpected failure', exc_info=True)
    print(f"qmul {args.command}: {err}", file=sys.stderr)
    return EXIT_MODEL

if __name__ == '__main__':
  sys.exit(main())
