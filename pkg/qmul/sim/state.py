''' Basis-state evaluation of reversible gate streams.

A SimState holds one bit per qubit for each of `batch` independent inputs,
stored as a (qubit_count, batch) boolean array so every gate acts on all
inputs at once. Register values are little-endian and may exceed 64 bits,
so they travel as numpy object arrays of python ints.
'''
import typing as t
import dataclasses
import numpy as np
from qmul.spec import Gate, Register, InvalidArgument, SimulationError

Values = t.Union[int, t.Sequence[int], np.ndarray]

@dataclasses.dataclass
class SimState:
  bits: np.ndarray

  @property
  def qubit_count(self) -> int:
    return self.bits.shape[0]

  @property
  def batch(self) -> int:
    return self.bits.shape[1]

  def _check(self, qubits: t.Iterable[int]):
    for q in qubits:
      if not 0 <= q < self.qubit_count:
        raise SimulationError(f"Qubit {q} is outside [0, {self.qubit_count})")

def init_state(qubit_count: int, batch: int = 1) -> SimState:
  if qubit_count < 0: raise InvalidArgument(f"qubit_count must be non-negative, got {qubit_count}")
  if batch < 1: raise InvalidArgument(f"batch must be positive, got {batch}")
  return SimState(np.zeros((qubit_count, batch), dtype=bool))

def _register_bounds(state: SimState, register: Register):
  if register.start < 0 or register.stop > state.qubit_count:
    raise SimulationError(f"{register} is outside [0, {state.qubit_count})")

def load_register(state: SimState, register: Register, value: Values) -> SimState:
  ''' Set the register little-endian to value, one value or one per batch entry '''
  _register_bounds(state, register)
  values = np.broadcast_to(np.asarray(value, dtype=object), (state.batch,))
  if any(v < 0 or v >> register.width for v in values):
    raise InvalidArgument(f"Value does not fit in {register.width} bits")
  for j, q in enumerate(register):
    state.bits[q] = (values >> j & 1).astype(bool)
  return state

def read_values(state: SimState, register: Register) -> np.ndarray:
  _register_bounds(state, register)
  acc = np.zeros(state.batch, dtype=object)
  for q in reversed(register):
    acc = acc * 2 + state.bits[q].astype(int)
  return acc

def read_register(state: SimState, register: Register) -> t.Union[int, np.ndarray]:
  values = read_values(state, register)
  return int(values[0]) if state.batch == 1 else values

def apply(state: SimState, gate: Gate) -> SimState:
  gate.validate()
  bits = state.bits
  if gate.kind == 'release':
    _register_bounds(state, gate.register)
    bits[gate.register.start:gate.register.stop] = False
    return state
  state._check(gate.qubits)
  if gate.kind == 'x':
    q, = gate.qubits
    np.logical_not(bits[q], out=bits[q])
  elif gate.kind == 'cnot':
    c, q = gate.qubits
    bits[q] ^= bits[c]
  else:
    # toffoli, and unand: a correct AND uncompute clears the target, a wrong one leaves it dirty
    c1, c2, q = gate.qubits
    bits[q] ^= bits[c1] & bits[c2]
  return state

def run(state: SimState, gates: t.Iterable[Gate]) -> SimState:
  for gate in gates:
    apply(state, gate)
  return state
