''' Logical layout, QEC scheme formulas and code distance selection
'''
import math
import typing as t
import dataclasses
from qmul.spec import CircuitTally, InvalidArgument, AboveThreshold, ModelInfeasible

if t.TYPE_CHECKING:
  from qmul.platforms import QubitParams

SchemeName = t.Literal['surface', 'floquet'] if getattr(t, 'Literal', None) else str

DEFAULT_DISTANCE_CAP = 99

def layout_total_qubits(q_alg: int) -> int:
  ''' Logical qubits once the algorithm qubits are laid out with routing space: 2q + ceil(sqrt(8q)) + 1 '''
  if q_alg < 1: raise InvalidArgument(f"q_alg must be at least 1, got {q_alg}")
  root = math.isqrt(8 * q_alg)
  if root * root < 8 * q_alg: root += 1
  return 2 * q_alg + root + 1

@dataclasses.dataclass(frozen=True)
class QecScheme:
  name: SchemeName
  p_star: float
  a_pre: float
  majorana_only: bool = False

  def __post_init__(self):
    if self.name not in ('surface', 'floquet'): raise InvalidArgument(f"Unknown QEC scheme {self.name!r}")
    if not 0 < self.p_star < 1: raise InvalidArgument(f"p_star must be in (0, 1), got {self.p_star}")
    if not self.a_pre > 0: raise InvalidArgument(f"a_pre must be positive, got {self.a_pre}")
    if self.name == 'floquet' and not self.majorana_only:
      raise InvalidArgument('The floquet scheme only runs on Majorana qubits')

  def phys_per_logical(self, d: int) -> int:
    if self.name == 'surface': return 2 * d * d
    return 4 * d * d + 8 * d

  def syndrome_round_time(self, params: 'QubitParams') -> float:
    if self.name == 'surface': return 4 * params.t_two_qubit + 2 * params.t_meas
    return 3 * params.t_meas

  def logical_cycle_time(self, d: int, params: 'QubitParams') -> float:
    return d * self.syndrome_round_time(params)

  def supports(self, params: 'QubitParams') -> bool:
    return not self.majorana_only or params.family == 'majorana'

  def to_dict(self) -> t.Dict[str, t.Any]:
    return dataclasses.asdict(self)

  @staticmethod
  def from_dict(**kwargs) -> 'QecScheme':
    return QecScheme(**kwargs)

SURFACE = QecScheme('surface', p_star=1e-2, a_pre=0.03)
FLOQUET = QecScheme('floquet', p_star=1e-2, a_pre=0.07, majorana_only=True)

SCHEMES = {scheme.name: scheme for scheme in (SURFACE, FLOQUET)}

def scheme(name: str) -> QecScheme:
  try:
    return SCHEMES[name]
  except KeyError:
    raise InvalidArgument(f"Unknown QEC scheme {name!r}, expected one of: {', '.join(SCHEMES)}") from None

def _check_below_threshold(scheme: QecScheme, p: float):
  if p >= scheme.p_star:
    raise AboveThreshold(f"physical error rate {p:g} is not below the {scheme.name} threshold {scheme.p_star:g}", stage='distance')

def logical_error_rate(scheme: QecScheme, p: float, d: int) -> float:
  _check_below_threshold(scheme, p)
  if d < 3 or d % 2 == 0: raise InvalidArgument(f"Code distance must be odd and at least 3, got {d}")
  return scheme.a_pre * (p / scheme.p_star) ** ((d + 1) // 2)

def select_distance(scheme: QecScheme, p: float, q_total: int, cycles: int, budget_logical: float, cap: int = DEFAULT_DISTANCE_CAP) -> int:
  ''' The smallest odd d >= 3 keeping q_total * cycles * logical_error_rate within budget_logical '''
  _check_below_threshold(scheme, p)
  if q_total < 1 or cycles < 1: raise InvalidArgument('q_total and cycles must be positive')
  for d in range(3, cap + 1, 2):
    if q_total * cycles * logical_error_rate(scheme, p, d) <= budget_logical:
      return d
  raise ModelInfeasible(f"no code distance up to {cap} meets the logical error budget {budget_logical:g}", stage='distance')

@dataclasses.dataclass(frozen=True)
class CycleModel:
  ''' Logical cycles charged per Toffoli and per measurement '''
  c_tof: int = 3
  c_meas: int = 1

  def __post_init__(self):
    if self.c_tof < 0 or self.c_meas < 0: raise InvalidArgument('Cycle coefficients must be non-negative')

  def to_dict(self) -> t.Dict[str, t.Any]:
    return dataclasses.asdict(self)

  @staticmethod
  def from_dict(**kwargs) -> 'CycleModel':
    return CycleModel(**kwargs)

def logical_cycles(tally: CircuitTally, model: CycleModel = CycleModel()) -> int:
  return model.c_tof * tally.toffoli + model.c_meas * tally.measurements

@dataclasses.dataclass(frozen=True)
class ErrorBudget:
  total: float = 0.01
  logical_share: float = 0.5
  distillation_share: float = 0.5

  def __post_init__(self):
    if not 0 < self.total < 1: raise InvalidArgument(f"budget total must be in (0, 1), got {self.total}")
    if self.logical_share < 0 or self.distillation_share < 0:
      raise InvalidArgument('budget shares must be non-negative')
    if not math.isclose(self.logical_share + self.distillation_share, 1.0):
      raise InvalidArgument('budget shares must sum to 1')

  @property
  def logical(self) -> float:
    return self.total * self.logical_share

  @property
  def distillation(self) -> float:
    return self.total * self.distillation_share

  def to_dict(self) -> t.Dict[str, t.Any]:
    return dataclasses.asdict(self)

  @staticmethod
  def from_dict(**kwargs) -> 'ErrorBudget':
    return ErrorBudget(**kwargs)
