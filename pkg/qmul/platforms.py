''' Qubit platform parameters: the six built-in presets and user parameter files.

Times are in seconds. Only gate_ns_e3 is pinned to published numbers; the
other presets follow the naming convention, where the suffix gives the
error exponent (e3 -> 1e-3) and the middle part the gate time scale.
'''
import typing as t
import dataclasses
from pathlib import PurePosixPath
from qmul.spec import ParamsError, UnknownPreset
from qmul.utils.config import Entry, read_flat, require_number

Family = t.Literal['gate_based', 'majorana'] if getattr(t, 'Literal', None) else str
FAMILIES = ('gate_based', 'majorana')

TIME_FIELDS = ('t_one_qubit', 't_two_qubit', 't_meas')
ERROR_FIELDS = ('e_one_qubit', 'e_two_qubit', 'e_meas', 't_inject_error')

@dataclasses.dataclass(frozen=True)
class QubitParams:
  name: str
  t_one_qubit: float
  t_two_qubit: float
  t_meas: float
  e_one_qubit: float
  e_two_qubit: float
  e_meas: float
  t_inject_error: float
  family: Family = 'gate_based'

  def __post_init__(self):
    for field in TIME_FIELDS:
      if not getattr(self, field) > 0:
        raise ParamsError(f"{field} must be positive, got {getattr(self, field)}", field=field)
    for field in ERROR_FIELDS:
      if not 0 < getattr(self, field) < 1:
        raise ParamsError(f"{field} must be in (0, 1), got {getattr(self, field)}", field=field)
    if self.family not in FAMILIES:
      raise ParamsError(f"family must be one of {FAMILIES}, got {self.family!r}", field='family')

  def to_dict(self) -> t.Dict[str, t.Any]:
    return dataclasses.asdict(self)

  @staticmethod
  def from_dict(**kwargs) -> 'QubitParams':
    return QubitParams(**kwargs)

def _preset(name, t_gate, t_meas, error, family='gate_based'):
  return QubitParams(
    name=name,
    t_one_qubit=t_gate, t_two_qubit=t_gate, t_meas=t_meas,
    e_one_qubit=error, e_two_qubit=error, e_meas=error,
    t_inject_error=error,
    family=family,
  )

PRESETS: t.Dict[str, QubitParams] = {
  params.name: params
  for params in (
    _preset('gate_ns_e3', 50e-9, 100e-9, 1e-3),
    _preset('gate_ns_e4', 50e-9, 100e-9, 1e-4),
    _preset('gate_us_e3', 100e-6, 100e-6, 1e-3),
    _preset('gate_us_e4', 100e-6, 100e-6, 1e-4),
    _preset('maj_ns_e4', 100e-9, 100e-9, 1e-4, 'majorana'),
    _preset('maj_ns_e6', 100e-9, 100e-9, 1e-6, 'majorana'),
  )
}

PLATFORMS = {
  'gate_ns_e3': 'superconducting',
  'gate_ns_e4': 'superconducting',
  'gate_us_e3': 'trapped-ion',
  'gate_us_e4': 'trapped-ion',
  'maj_ns_e4': 'majorana',
  'maj_ns_e6': 'majorana',
}

class PresetInfo(t.NamedTuple):
  name: str
  params: QubitParams
  schemes: t.Tuple[str, ...]
  platform: str

def compatible_schemes(params: QubitParams) -> t.Tuple[str, ...]:
  return ('surface', 'floquet') if params.family == 'majorana' else ('surface',)

def default_scheme(params: QubitParams) -> str:
  return 'floquet' if params.family == 'majorana' else 'surface'

def preset(name: str, presets: t.Mapping[str, QubitParams] = PRESETS) -> QubitParams:
  try:
    return presets[name]
  except KeyError:
    raise UnknownPreset(name, list(presets)) from None

def list_presets(presets: t.Mapping[str, QubitParams] = PRESETS) -> t.List[PresetInfo]:
  return [
    PresetInfo(name, params, compatible_schemes(params), PLATFORMS.get(name, params.family))
    for name, params in presets.items()
  ]

def params_from_entries(entries: t.Mapping[str, Entry], *, path: t.Optional[str] = None, name: t.Optional[str] = None) -> QubitParams:
  ''' Build QubitParams from parsed entries; `name` and `t_inject_error` may be omitted '''
  fields = {field.name for field in dataclasses.fields(QubitParams)}
  for key, entry in entries.items():
    if key not in fields:
      raise ParamsError(f"unknown field {key!r}", path=path, line=entry.line, field=key)
  values: t.Dict[str, t.Any] = {}
  for key in TIME_FIELDS + ERROR_FIELDS:
    if key in entries:
      values[key] = float(require_number(entries[key], key, path))
    elif key != 't_inject_error':
      raise ParamsError(f"missing field {key!r}", path=path, field=key)
  values['family'] = str(entries['family'].value) if 'family' in entries else 'gate_based'
  values['name'] = str(entries['name'].value) if 'name' in entries else (name or 'custom')
  if 't_inject_error' not in values:
    values['t_inject_error'] = values['e_meas'] if values['family'] == 'majorana' else values['e_two_qubit']
  try:
    return QubitParams(**values)
  except ParamsError as err:
    entry = entries.get(err.field)
    raise ParamsError(str(err), path=path, line=entry.line if entry else None, field=err.field) from None

def load_params(path: str) -> QubitParams:
  ''' Read a flat key-value parameter file, usable anywhere a preset is '''
  return params_from_entries(read_flat(path), path=str(path), name=PurePosixPath(str(path)).stem)

def resolve_platform(spec: str, presets: t.Mapping[str, QubitParams] = PRESETS) -> QubitParams:
  ''' A preset name, or a path to a parameter file '''
  if spec in presets: return presets[spec]
  if '/' in spec or spec.endswith(('.txt', '.conf', '.params', '.cfg')):
    return load_params(spec)
  raise UnknownPreset(spec, list(presets))

