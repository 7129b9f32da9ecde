''' From a logical circuit tally to physical qubits and runtime.

  q_total   = layout_total_qubits(q_alg)
  cycles    = c_tof * toffoli + c_meas * measurements
  d         = select_distance(...) against the logical share of the budget
  runtime   = cycles * d * syndrome_round_time
  factories = ceil(t_states * factory.duration / runtime)

Factories are sized so that T-state production never holds the algorithm up.
'''
import math
import logging
import typing as t
import dataclasses
from qmul.spec import CircuitTally, InvalidCombination, T_STATES_PER_TOFFOLI, t_states_of
from qmul.qec.models import QecScheme, ErrorBudget, CycleModel, DEFAULT_DISTANCE_CAP, layout_total_qubits, logical_cycles, select_distance
from qmul.qec.factory import TFactory, DEFAULT_MAX_ROUNDS, build_t_factory

if t.TYPE_CHECKING:
  from qmul.platforms import QubitParams

logger = logging.getLogger(__name__)

@dataclasses.dataclass(frozen=True)
class PhysicalEstimate:
  q_alg: int
  q_total: int
  distance: int
  phys_per_logical: int
  logical_cycles: int
  t_states: int
  factories: int
  factory_qubits: int
  physical_qubits: int
  runtime_seconds: float
  factory: t.Optional[TFactory] = None

  def to_dict(self) -> t.Dict[str, t.Any]:
    return dataclasses.asdict(self)

def physical_error_rate(params: 'QubitParams') -> float:
  return max(params.e_one_qubit, params.e_two_qubit, params.e_meas)

def estimate(
  tally: CircuitTally,
  params: 'QubitParams',
  scheme: QecScheme,
  budget: ErrorBudget = ErrorBudget(),
  *,
  cycle_model: CycleModel = CycleModel(),
  t_states_per_toffoli: int = T_STATES_PER_TOFFOLI,
  distance_cap: int = DEFAULT_DISTANCE_CAP,
  factory_max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> PhysicalEstimate:
  if not scheme.supports(params):
    raise InvalidCombination(f"the {scheme.name} scheme does not run on {params.name} ({params.family})", stage='estimate')
  q_alg = max(tally.qubit_highwater, 1)
  q_total = layout_total_qubits(q_alg)
  cycles = logical_cycles(tally, cycle_model)
  d = select_distance(scheme, physical_error_rate(params), q_total, max(cycles, 1), budget.logical, cap=distance_cap)
  runtime = cycles * scheme.logical_cycle_time(d, params)
  t_states = t_states_of(tally, t_states_per_toffoli)
  factory = build_t_factory(scheme, params, budget.distillation / max(t_states, 1), d, max_rounds=factory_max_rounds)
  factories = math.ceil(t_states * factory.duration / runtime) if t_states else 0
  ppl = scheme.phys_per_logical(d)
  result = PhysicalEstimate(
    q_alg=q_alg,
    q_total=q_total,
    distance=d,
    phys_per_logical=ppl,
    logical_cycles=cycles,
    t_states=t_states,
    factories=factories,
    factory_qubits=factories * factory.physical_qubits,
    physical_qubits=q_total * ppl + factories * factory.physical_qubits,
    runtime_seconds=runtime,
    factory=factory,
  )
  logger.debug(f"{params.name}/{scheme.name}: d={d} physical_qubits={result.physical_qubits} runtime={runtime:.3e}s")
  return result
