from qmul.qec.models import (
  QecScheme, ErrorBudget, CycleModel, SURFACE, FLOQUET, SCHEMES,
  layout_total_qubits, logical_error_rate, logical_cycles, select_distance,
)
from qmul.qec.factory import TFactory, build_t_factory
from qmul.qec.estimate import PhysicalEstimate, estimate
