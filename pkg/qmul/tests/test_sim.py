import pytest
import numpy as np
from qmul.spec import Register, InvalidArgument, SimulationError, X, CNOT, TOFFOLI, RELEASE
from qmul.sim.state import init_state, load_register, read_register, apply, run

def test_init_state():
  state = init_state(4)
  assert state.qubit_count == 4 and state.batch == 1
  assert not state.bits.any()
  assert read_register(state, Register(0, 4)) == 0
  with pytest.raises(SimulationError): apply(init_state(0), X(0))
  with pytest.raises(InvalidArgument): init_state(-1)

def test_load_read():
  state = init_state(4)
  load_register(state, Register(0, 4), 5)
  assert state.bits[:, 0].tolist() == [True, False, True, False]
  assert read_register(state, Register(0, 4)) == 5
  with pytest.raises(InvalidArgument): load_register(state, Register(0, 4), 16)
  with pytest.raises(SimulationError): load_register(state, Register(2, 4), 1)
  batch = init_state(4, 16)
  load_register(batch, Register(0, 4), np.arange(16))
  assert list(read_register(batch, Register(0, 4))) == list(range(16))

def test_wide_values():
  state = init_state(130)
  value = (1 << 129) + 12345
  load_register(state, Register(0, 130), value)
  assert read_register(state, Register(0, 130)) == value

def test_truth_tables():
  state = init_state(3, 8)
  load_register(state, Register(0, 3), np.arange(8))
  before = state.bits.copy()
  apply(state, TOFFOLI(0, 1, 2))
  # target flips exactly where both controls are set
  assert list(read_register(state, Register(0, 3))) == [0, 1, 2, 7, 4, 5, 6, 3]
  apply(state, TOFFOLI(0, 1, 2))
  assert (state.bits == before).all()
  for gate in (X(1), CNOT(2, 0)):
    run(state, [gate, gate])
    assert (state.bits == before).all()
  apply(state, CNOT(0, 1))
  assert list(read_register(state, Register(0, 2))) == [0, 3, 2, 1, 0, 3, 2, 1]

def test_release():
  state = init_state(4)
  load_register(state, Register(0, 4), 15)
  apply(state, RELEASE(Register(1, 2)))
  assert read_register(state, Register(0, 4)) == 0b1001
  with pytest.raises(SimulationError): apply(state, RELEASE(Register(3, 2)))
