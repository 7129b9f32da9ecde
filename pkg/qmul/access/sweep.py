''' Tallies and estimates over (algorithm, n, platform) grids.

Tallies are platform independent, so each (algorithm, n, mode) is built once
into a counting sink and reused for every platform.
'''
import logging
import typing as t
import dataclasses
import numpy as np
from qmul.spec import CircuitTally, QmulError
from qmul.impl.counting import Counting
from qmul.arith.spec import MultiplySpec, DEFAULT_KARATSUBA_THRESHOLD
from qmul.arith.multiplier import build_multiplier
from qmul.qec.estimate import PhysicalEstimate, estimate
from qmul.platforms import QubitParams, default_scheme
from qmul.settings import EstimatorConfig
from qmul.utils.cache import MemoCache
from qmul.utils.process import map_spawned

logger = logging.getLogger(__name__)

FIG1_BITS = tuple(8 << i for i in range(11))
FIG2_BITS = (2048,)
ALL_ALGORITHMS = ('schoolbook', 'karatsuba', 'windowed')

def sweep_constant(n: int, seed: int = 0) -> int:
  ''' A fixed pseudo-random n-bit constant with its top bit set '''
  bits = np.random.default_rng([seed, n]).integers(0, 2, size=n)
  bits[-1] = 1
  return int(''.join(map(str, bits[::-1])), 2)

@dataclasses.dataclass(frozen=True)
class TallyKey:
  algorithm: str
  n: int
  mode: str = 'qc'
  karatsuba_threshold: int = DEFAULT_KARATSUBA_THRESHOLD
  window: t.Optional[int] = None
  seed: int = 0

  @property
  def spec(self) -> MultiplySpec:
    return MultiplySpec(self.algorithm, self.n, self.mode, self.karatsuba_threshold, self.window)

def build_tally(key: TallyKey) -> CircuitTally:
  spec = key.spec
  sink = Counting()
  build_multiplier(spec, sweep_constant(spec.n, key.seed) if spec.mode == 'qc' else None, sink)
  return sink.tally()

tallies: MemoCache[TallyKey, CircuitTally] = MemoCache(build_tally)

def _build_or_error(key: TallyKey) -> t.Tuple[t.Optional[CircuitTally], t.Optional[str]]:
  try:
    return build_tally(key), None
  except QmulError as err:
    return None, str(err)

def prefetch_tallies(keys: t.Iterable[TallyKey], workers: int = 1):
  missing = sorted({key for key in keys if key not in tallies}, key=lambda key: (key.algorithm, key.n))
  if not missing: return
  logger.info(f"building {len(missing)} tallies")
  for key, (tally, err) in zip(missing, map_spawned(_build_or_error, [(key,) for key in missing], workers=workers)):
    if tally is not None: tallies[key] = tally

@dataclasses.dataclass(frozen=True)
class ResultRow:
  algorithm: str
  n: int
  mode: str
  platform: str
  code: str = ''
  tally: t.Optional[CircuitTally] = None
  estimate: t.Optional[PhysicalEstimate] = None
  error: str = ''

  @property
  def sort_key(self):
    return (self.algorithm, self.n, self.platform, self.mode)

def estimate_cell(key: TallyKey, params: QubitParams, code: t.Optional[str] = None, config: EstimatorConfig = EstimatorConfig()) -> ResultRow:
  ''' One grid cell; model and mode failures land in the row's error column '''
  code = code or default_scheme(params)
  row = ResultRow(key.algorithm, key.n, key.mode, params.name, code)
  scheme = config.schemes.get(code)
  if scheme is None:
    return dataclasses.replace(row, error=f"unknown QEC scheme {code!r}")
  try:
    tally = tallies(key)
    row = dataclasses.replace(row, tally=tally)
    return dataclasses.replace(row, estimate=estimate(
      tally, params, scheme, config.budget,
      cycle_model=config.cycles,
      t_states_per_toffoli=config.t_states_per_toffoli,
      distance_cap=config.distance_cap,
      factory_max_rounds=config.factory_max_rounds,
    ))
  except QmulError as err:
    logger.debug(f"{key}: {err}")
    return dataclasses.replace(row, error=str(err))

def run_sweep(
  algorithms: t.Sequence[str],
  bit_sizes: t.Sequence[int],
  platforms: t.Sequence[QubitParams],
  *,
  mode: str = 'qc',
  code: t.Optional[str] = None,
  karatsuba_threshold: int = DEFAULT_KARATSUBA_THRESHOLD,
  window: t.Optional[int] = None,
  config: EstimatorConfig = EstimatorConfig(),
  workers: int = 1,
) -> t.List[ResultRow]:
  keys = [
    TallyKey(algorithm, n, mode, karatsuba_threshold, window)
    for algorithm in algorithms
    for n in bit_sizes
  ]
  buildable = []
  for key in keys:
    try:
      key.spec
    except QmulError:
      continue
    buildable.append(key)
  prefetch_tallies(buildable, workers=workers)
  rows = [estimate_cell(key, params, code, config) for key in keys for params in platforms]
  return sorted(rows, key=lambda row: row.sort_key)
