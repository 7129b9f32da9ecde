import pytest
from qmul.spec import InvalidArgument, ParamsError

def test_memo_cache():
  from qmul.utils.cache import MemoCache
  calls = []
  def resolve(key):
    calls.append(key)
    if key < 0: raise InvalidArgument(f"negative key {key}")
    return key * key
  cache = MemoCache(resolve)
  assert cache(3) == 9 and cache(3) == 9
  with pytest.raises(InvalidArgument): cache(-1)
  with pytest.raises(InvalidArgument): cache(-1)
  assert calls == [3, -1]
  assert 3 in cache and len(cache) == 2
  cache[4] = 0
  assert cache(4) == 0
  cache.discard(3)
  assert cache(3) == 9 and calls == [3, -1, 3]

def test_parse_flat():
  from qmul.utils.config import parse_flat, Entry
  entries = parse_flat('\n'.join([
    '# comment',
    '',
    'a = 1',
    'b.c = 2.5e-3  # trailing',
    'name = gate_ns_e3',
  ]))
  assert entries == {
    'a': Entry(1, 3),
    'b.c': Entry(2.5e-3, 4),
    'name': Entry('gate_ns_e3', 5),
  }
  with pytest.raises(ParamsError) as err: parse_flat('a = 1\na = 2', path='x.conf')
  assert err.value.line == 2 and str(err.value).startswith('x.conf:2:')
  with pytest.raises(ParamsError): parse_flat('a =')

def test_map_spawned():
  from qmul.utils.process import map_spawned
  from qmul.arith.windowed import choose_window
  from qmul.qec.models import layout_total_qubits
  jobs = [(n,) for n in (1, 64, 2048)]
  assert map_spawned(choose_window, jobs) == [1, 6, 10]
  assert map_spawned(choose_window, jobs, workers=2) == [1, 6, 10]
  assert map_spawned(choose_window, []) == []
  with pytest.raises(InvalidArgument): map_spawned(layout_total_qubits, [(1,), (0,)], workers=2)
