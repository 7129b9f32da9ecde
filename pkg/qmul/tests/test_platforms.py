import pytest
from qmul.spec import ParamsError, UnknownPreset
from qmul.platforms import PRESETS, QubitParams, preset, list_presets, load_params, resolve_platform, default_scheme

PARAMS = '''
# a custom superconducting device
t_one_qubit = 50e-9
t_two_qubit = 50e-9
t_meas = 100e-9   # readout
e_one_qubit = 1e-3
e_two_qubit = 1e-3
e_meas = 1e-3
'''

def test_presets():
  entries = list_presets()
  assert len(entries) == 6
  platforms = [info.platform for info in entries]
  assert {platform: platforms.count(platform) for platform in platforms} == {'superconducting': 2, 'trapped-ion': 2, 'majorana': 2}
  for info in entries:
    assert ('floquet' in info.schemes) == info.name.startswith('maj_')
    assert 'surface' in info.schemes
  gate = preset('gate_ns_e3')
  assert (gate.t_two_qubit, gate.t_meas, gate.e_two_qubit) == (50e-9, 100e-9, 1e-3)
  assert default_scheme(gate) == 'surface'
  assert default_scheme(preset('maj_ns_e6')) == 'floquet'
  for e3, e4 in (('gate_ns_e3', 'gate_ns_e4'), ('gate_us_e3', 'gate_us_e4')):
    assert PRESETS[e3].t_two_qubit == PRESETS[e4].t_two_qubit
    assert PRESETS[e4].e_two_qubit < PRESETS[e3].e_two_qubit

def test_unknown_preset():
  with pytest.raises(UnknownPreset) as err: preset('gate_ms_e9')
  assert 'gate_ns_e3' in str(err.value)
  assert isinstance(err.value, KeyError)
  with pytest.raises(UnknownPreset): resolve_platform('nonsense')

def test_load_params(tmp_path):
  path = tmp_path / 'device.params'
  path.write_text(PARAMS)
  params = load_params(str(path))
  assert params.name == 'device'
  assert params.family == 'gate_based'
  assert params.t_inject_error == params.e_two_qubit == 1e-3
  assert params == QubitParams.from_dict(**dict(preset('gate_ns_e3').to_dict(), name='device'))
  assert resolve_platform(str(path)) == params

def test_load_params_errors(tmp_path):
  path = tmp_path / 'bad.params'
  path.write_text(PARAMS.replace('e_two_qubit = 1e-3', 'e_two_qubit = 1.5'))
  with pytest.raises(ParamsError) as err: load_params(str(path))
  assert err.value.field == 'e_two_qubit' and err.value.line == 7
  path.write_text('\n'.join(line for line in PARAMS.splitlines() if not line.startswith('t_meas')))
  with pytest.raises(ParamsError) as err: load_params(str(path))
  assert err.value.field == 't_meas'
  path.write_text(PARAMS + 'colour = blue\n')
  with pytest.raises(ParamsError) as err: load_params(str(path))
  assert err.value.field == 'colour'
  path.write_text(PARAMS + 't_meas = 1e-7\n')
  with pytest.raises(ParamsError): load_params(str(path))
  path.write_text(PARAMS + 'this line has no value\n')
  with pytest.raises(ParamsError): load_params(str(path))
  with pytest.raises(ParamsError): load_params(str(tmp_path / 'missing.params'))

def test_load_params_fsspec():
  fsspec = pytest.importorskip('fsspec')
  with fsspec.open('memory://qmul/maj.params', 'w') as fw:
    fw.write(PARAMS.replace('e_meas = 1e-3', 'e_meas = 1e-5') + 'family = majorana\n')
  params = load_params('memory://qmul/maj.params')
  assert params.name == 'maj'
  assert params.family == 'majorana'
  assert params.t_inject_error == 1e-5
  assert default_scheme(params) == 'floquet'

def test_config_overrides(tmp_path):
  from qmul.settings import EstimatorConfig, load_config
  assert load_config() == EstimatorConfig()
  path = tmp_path / 'estimator.conf'
  path.write_text('\n'.join([
    'budget.total = 0.001',
    'cycles.c_meas = 2',
    'surface.a_pre = 0.1',
    'distance.cap = 51',
    'preset.gate_ns_e3.e_two_qubit = 5e-4',
  ]))
  config = load_config(str(path))
  assert config.budget.total == 0.001
  assert config.cycles.c_meas == 2 and config.cycles.c_tof == 3
  assert config.schemes['surface'].a_pre == 0.1
  assert config.schemes['floquet'] == EstimatorConfig().schemes['floquet']
  assert config.distance_cap == 51
  assert config.presets['gate_ns_e3'].e_two_qubit == 5e-4
  assert PRESETS['gate_ns_e3'].e_two_qubit == 1e-3
  assert EstimatorConfig.from_dict(**config.to_dict()) == config

def test_config_errors(tmp_path):
  from qmul.settings import load_config
  path = tmp_path / 'estimator.conf'
  for text, field in (
    ('budget.color = 1', 'budget.color'),
    ('preset.gate_xx_e3.t_meas = 1e-7', 'preset.gate_xx_e3.t_meas'),
    ('distance.cap = 2.5', 'distance.cap'),
    ('surface.p_star = high', 'surface.p_star'),
  ):
    path.write_text(f"# override\n{text}\n")
    with pytest.raises(ParamsError) as err: load_config(str(path))
    assert err.value.field == field
  path.write_text('budget.total = 7\n')
  with pytest.raises(ParamsError) as err: load_config(str(path))
  assert err.value.path == str(path)
