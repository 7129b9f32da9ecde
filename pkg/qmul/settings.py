''' Estimator settings and their `--config` overrides.

An override file uses the flat key-value format of the parameter files:

  t_states_per_toffoli = 4
  cycles.c_tof = 3
  budget.total = 0.01
  surface.p_star = 1e-2
  distance.cap = 99
  factory.max_rounds = 3
  preset.gate_ns_e3.e_two_qubit = 5e-4
'''
import typing as t
import dataclasses
from qmul.spec import ParamsError, InvalidArgument, T_STATES_PER_TOFFOLI
from qmul.qec.models import QecScheme, ErrorBudget, CycleModel, SCHEMES, DEFAULT_DISTANCE_CAP
from qmul.qec.factory import DEFAULT_MAX_ROUNDS
from qmul.platforms import QubitParams, PRESETS, TIME_FIELDS, ERROR_FIELDS
from qmul.utils.config import Entry, read_flat, require_number

@dataclasses.dataclass(frozen=True)
class EstimatorConfig:
  t_states_per_toffoli: int = T_STATES_PER_TOFFOLI
  cycles: CycleModel = CycleModel()
  budget: ErrorBudget = ErrorBudget()
  schemes: t.Mapping[str, QecScheme] = dataclasses.field(default_factory=lambda: dict(SCHEMES))
  distance_cap: int = DEFAULT_DISTANCE_CAP
  factory_max_rounds: int = DEFAULT_MAX_ROUNDS
  presets: t.Mapping[str, QubitParams] = dataclasses.field(default_factory=lambda: dict(PRESETS))

  def to_dict(self) -> t.Dict[str, t.Any]:
    return dict(
      t_states_per_toffoli=self.t_states_per_toffoli,
      cycles=self.cycles.to_dict(),
      budget=self.budget.to_dict(),
      schemes={name: scheme.to_dict() for name, scheme in self.schemes.items()},
      distance_cap=self.distance_cap,
      factory_max_rounds=self.factory_max_rounds,
      presets={name: params.to_dict() for name, params in self.presets.items()},
    )

  @staticmethod
  def from_dict(*, cycles=None, budget=None, schemes=None, presets=None, **kwargs) -> 'EstimatorConfig':
    return EstimatorConfig(
      cycles=CycleModel.from_dict(**cycles) if cycles else CycleModel(),
      budget=ErrorBudget.from_dict(**budget) if budget else ErrorBudget(),
      schemes={name: QecScheme.from_dict(**scheme) for name, scheme in schemes.items()} if schemes else dict(SCHEMES),
      presets={name: QubitParams.from_dict(**params) for name, params in presets.items()} if presets else dict(PRESETS),
      **kwargs,
    )

INT_KEYS = {
  't_states_per_toffoli': 't_states_per_toffoli',
  'distance.cap': 'distance_cap',
  'factory.max_rounds': 'factory_max_rounds',
}

def _as_int(entry: Entry, key: str, path: t.Optional[str]) -> int:
  value = require_number(entry, key, path)
  if value != int(value) or value < 1:
    raise ParamsError(f"{key} must be a positive integer, got {value}", path=path, line=entry.line, field=key)
  return int(value)

def apply_overrides(config: EstimatorConfig, entries: t.Mapping[str, Entry], *, path: t.Optional[str] = None) -> EstimatorConfig:
  top: t.Dict[str, t.Any] = {}
  groups: t.Dict[str, t.Dict[str, t.Any]] = {'cycles': {}, 'budget': {}}
  schemes: t.Dict[str, t.Dict[str, float]] = {}
  presets: t.Dict[str, t.Dict[str, t.Any]] = {}
  for key, entry in entries.items():
    head, _, rest = key.partition('.')
    if key in INT_KEYS:
      top[INT_KEYS[key]] = _as_int(entry, key, path)
    elif head == 'cycles' and rest in ('c_tof', 'c_meas'):
      groups['cycles'][rest] = _as_int(entry, key, path) if entry.value else 0
    elif head == 'budget' and rest in ('total', 'logical_share', 'distillation_share'):
      groups['budget'][rest] = float(require_number(entry, key, path))
    elif head in SCHEMES and rest in ('p_star', 'a_pre'):
      schemes.setdefault(head, {})[rest] = float(require_number(entry, key, path))
    elif head == 'preset' and rest.count('.') == 1:
      name, field = rest.split('.')
      if name not in config.presets:
        raise ParamsError(f"unknown preset {name!r}", path=path, line=entry.line, field=key)
      if field in TIME_FIELDS + ERROR_FIELDS:
        value = float(require_number(entry, key, path))
      elif field == 'family':
        value = str(entry.value)
      else:
        raise ParamsError(f"unknown preset field {field!r}", path=path, line=entry.line, field=key)
      presets.setdefault(name, {})[field] = value
    else:
      raise ParamsError(f"unknown configuration key {key!r}", path=path, line=entry.line, field=key)
  try:
    return dataclasses.replace(config,
      cycles=dataclasses.replace(config.cycles, **groups['cycles']),
      budget=dataclasses.replace(config.budget, **groups['budget']),
      schemes=dict(config.schemes, **{
        name: dataclasses.replace(config.schemes[name], **changes)
        for name, changes in schemes.items()
      }),
      presets=dict(config.presets, **{
        name: dataclasses.replace(config.presets[name], **changes)
        for name, changes in presets.items()
      }),
      **top,
    )
  except InvalidArgument as err:
    raise ParamsError(str(err), path=path, field=getattr(err, 'field', None)) from None

def load_config(path: t.Optional[str] = None, config: EstimatorConfig = None) -> EstimatorConfig:
  config = config or EstimatorConfig()
  if path is None: return config
  return apply_overrides(config, read_flat(path), path=str(path))
