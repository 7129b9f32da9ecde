''' T-state factories built from stacked 15-to-1 distillation rounds
'''
import math
import typing as t
import dataclasses
from qmul.spec import InvalidArgument, ModelInfeasible
from qmul.qec.models import QecScheme

if t.TYPE_CHECKING:
  from qmul.platforms import QubitParams

DEFAULT_MAX_ROUNDS = 3
INPUT_STATES = 15
ROUND_CYCLES = 11

@dataclasses.dataclass(frozen=True)
class TFactory:
  physical_qubits: int
  duration: float
  output_error: float
  rounds: int
  distance: int

  def to_dict(self) -> t.Dict[str, t.Any]:
    return dataclasses.asdict(self)

def distill(p_in: float) -> float:
  return 35 * p_in ** 3

def factory_distance(d: int) -> int:
  d_f = max(3, math.ceil(d / 2))
  return d_f if d_f % 2 else d_f + 1

def build_t_factory(scheme: QecScheme, params: 'QubitParams', required_error: float, d: int, max_rounds: int = DEFAULT_MAX_ROUNDS) -> TFactory:
  ''' The fewest distillation rounds reaching required_error, each round run at about half the algorithm distance '''
  if required_error <= 0: raise InvalidArgument(f"required_error must be positive, got {required_error}")
  error = params.t_inject_error
  for rounds in range(1, max_rounds + 1):
    error = distill(error)
    if error <= required_error: break
  else:
    raise ModelInfeasible(
      f"{max_rounds} distillation rounds from {params.t_inject_error:g} do not reach {required_error:g}",
      stage='factory',
    )
  d_f = factory_distance(d)
  return TFactory(
    physical_qubits=INPUT_STATES * scheme.phys_per_logical(d_f) * rounds,
    duration=ROUND_CYCLES * d_f * scheme.syndrome_round_time(params) * rounds,
    output_error=error,
    rounds=rounds,
    distance=d_f,
  )
