import pytest
import numpy as np
from qmul.spec import InvalidArgument
from qmul.impl.counting import Counting
from qmul.impl.recording import Recording
from qmul.arith.circuit import Circuit, Const
from qmul.sim.state import init_state, load_register, read_register, run

def simulate(circuit: Circuit, loads, batch: int = 1):
  state = init_state(circuit.qubit_count, batch)
  for register, value in loads.items():
    load_register(state, register, value)
  return run(state, circuit.sink.gates)

def test_inplace_add():
  from qmul.arith.adder import emit_inplace_add
  circuit = Circuit(Recording())
  target, addend = circuit.allocate(4), circuit.allocate(3)
  emit_inplace_add(circuit, target, addend)
  state = simulate(circuit, {addend: 0b101})
  assert read_register(state, target) == 0b0101
  assert read_register(state, addend) == 0b101
  circuit = Circuit(Recording())
  target, addend = circuit.allocate(4), circuit.allocate(4)
  emit_inplace_add(circuit, target, addend)
  state = simulate(circuit, {target: 0b1111, addend: 0b0001})
  assert read_register(state, target) == 0

def test_inplace_add_exhaustive():
  from qmul.arith.adder import emit_inplace_add
  circuit = Circuit(Recording())
  target, addend = circuit.allocate(3), circuit.allocate(3)
  emit_inplace_add(circuit, target, addend)
  cases = np.arange(64)
  state = simulate(circuit, {target: cases % 8, addend: cases // 8}, batch=64)
  assert (read_register(state, target) == (cases % 8 + cases // 8) % 8).all()
  assert (read_register(state, addend) == cases // 8).all()
  assert not state.bits[6:].any()

def test_adder_counts():
  from qmul.arith.adder import emit_inplace_add, adder_toffoli, adder_cnot
  previous = None
  for m in range(1, 9):
    tallies = []
    for sink in (Counting(), Recording()):
      circuit = Circuit(sink)
      target, addend = circuit.allocate(m), circuit.allocate(m)
      emit_inplace_add(circuit, target, addend)
      tallies.append(sink.tally())
    assert tallies[0] == tallies[1]
    assert tallies[0].toffoli == adder_toffoli(m)
    assert tallies[0].cnot == adder_cnot(m)
    # one MAJ and one UMA per extra bit
    if previous is not None: assert tallies[0].toffoli == previous + 2
    previous = tallies[0].toffoli
  assert (adder_toffoli(8), adder_cnot(8)) == (14, 30)
  assert (adder_toffoli(1), adder_cnot(1)) == (0, 1)

def test_copy_add():
  from qmul.arith.adder import emit_copy_add, adder_toffoli, adder_cnot
  circuit = Circuit(Recording())
  target, addend = circuit.allocate(5), circuit.allocate(3)
  emit_copy_add(circuit, target, addend)
  cases = np.arange(256)
  state = simulate(circuit, {target: cases % 32, addend: cases // 32}, batch=256)
  assert (read_register(state, target) == (cases % 32 + cases // 32) % 32).all()
  assert (read_register(state, addend) == cases // 32).all()
  assert not state.bits[8:].any()
  counting = Circuit(Counting())
  emit_copy_add(counting, counting.allocate(5), counting.allocate(3))
  tally = counting.sink.tally()
  assert tally == circuit.sink.tally()
  assert tally.toffoli == adder_toffoli(5)
  assert tally.cnot == adder_cnot(5) + 2 * 3
  # the addend is never widened in place: a full-width operand and a carry sit beside it
  assert tally.qubit_highwater == 5 + 3 + 5 + 1

def test_inplace_sub():
  from qmul.arith.adder import emit_inplace_sub
  circuit = Circuit(Recording())
  target, addend = circuit.allocate(4), circuit.allocate(4)
  emit_inplace_sub(circuit, target, addend)
  state = simulate(circuit, {target: 5, addend: 7})
  assert read_register(state, target) == 14
  assert read_register(state, addend) == 7

@pytest.mark.parametrize('quantum', [True, False])
def test_controlled_add(quantum: bool):
  from qmul.arith.adder import emit_controlled_add
  for control_value, expected in ((0, 2), (1, 5)):
    circuit = Circuit(Recording())
    control, target = circuit.allocate(1), circuit.allocate(4)
    loads = {control: control_value, target: 2}
    if quantum:
      addend = circuit.allocate(4)
      loads[addend] = 3
    else:
      addend = Const(3, 4)
    io = circuit.qubit_count
    emit_controlled_add(circuit, control[0], target, addend)
    state = simulate(circuit, loads)
    assert read_register(state, target) == expected
    assert not state.bits[io:].any()

def test_controlled_add_costs_more():
  from qmul.arith.adder import emit_inplace_add, emit_controlled_add
  plain, controlled = Counting(), Counting()
  circuit = Circuit(plain)
  target, addend = circuit.allocate(6), circuit.allocate(6)
  emit_inplace_add(circuit, target, addend)
  circuit = Circuit(controlled)
  control, target, addend = circuit.allocate(1), circuit.allocate(6), circuit.allocate(6)
  emit_controlled_add(circuit, control[0], target, addend)
  assert controlled.tally().toffoli >= plain.tally().toffoli + 6

def test_copy_and_not():
  from qmul.arith.adder import emit_copy, emit_not
  circuit = Circuit(Recording())
  src, dst = circuit.allocate(3), circuit.allocate(4)
  emit_copy(circuit, src, dst)
  emit_not(circuit, src)
  state = simulate(circuit, {src: 0b110, dst: 0b1001})
  assert read_register(state, dst) == 0b1111
  assert read_register(state, src) == 0b001
  with pytest.raises(InvalidArgument): emit_copy(circuit, dst, src)

def test_add_errors():
  from qmul.arith.adder import emit_inplace_add, emit_controlled_add
  circuit = Circuit(Counting())
  r = circuit.allocate(8)
  with pytest.raises(InvalidArgument): emit_inplace_add(circuit, r[0:4], r[2:6])
  with pytest.raises(InvalidArgument): emit_inplace_add(circuit, r[0:2], r[2:5])
  with pytest.raises(InvalidArgument): emit_controlled_add(circuit, r[1], r[0:4], r[4:8])
  with pytest.raises(InvalidArgument): emit_controlled_add(circuit, r[7], r[0:2], Const(5, 3))
