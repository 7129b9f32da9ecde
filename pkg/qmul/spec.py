''' The qmul core interface: registers, the gate alphabet, tallies and gate sinks.

Every builder streams its gates into a GateSink. A counting sink only keeps
a CircuitTally; a recording sink keeps the gate list so it can be replayed
by the simulator. Registers are little-endian everywhere.
'''
import typing as t
import dataclasses

QubitId = int
Qubits = t.Sequence[QubitId]

GateKind = t.Literal['x', 'cnot', 'toffoli', 'unand', 'release'] if getattr(t, 'Literal', None) else str

class QmulError(Exception):
  pass

class InvalidArgument(QmulError, ValueError):
  pass

class InvalidGate(InvalidArgument):
  pass

class UnsupportedMode(InvalidArgument):
  pass

class UnknownPreset(InvalidArgument, KeyError):
  def __init__(self, name: str, valid: t.Sequence[str]) -> None:
    super().__init__(f"Unknown preset {name!r}, expected one of: {', '.join(valid)}")
    self.name = name
    self.valid = tuple(valid)
  def __str__(self) -> str:
    return self.args[0]

class ParamsError(InvalidArgument):
  def __init__(self, message: str, *, path: str = None, line: int = None, field: str = None) -> None:
    where = ':'.join(str(part) for part in (path, line) if part is not None)
    super().__init__(f"{where}: {message}" if where else message)
    self.path = path
    self.line = line
    self.field = field

class ModelError(QmulError):
  ''' The physical model cannot produce an estimate; `stage` names the failing step '''
  def __init__(self, message: str, *, stage: str = 'estimate') -> None:
    super().__init__(f"[{stage}] {message}")
    self.stage = stage

class AboveThreshold(ModelError):
  pass

class ModelInfeasible(ModelError):
  pass

class InvalidCombination(ModelError):
  pass

class SimulationError(QmulError, IndexError):
  pass

@dataclasses.dataclass(frozen=True)
class Register:
  start: QubitId
  width: int

  def __post_init__(self):
    if self.width < 1: raise InvalidArgument(f"Register width must be positive, got {self.width}")
    if self.start < 0: raise InvalidArgument(f"Register start must be non-negative, got {self.start}")

  @property
  def stop(self) -> QubitId:
    return self.start + self.width

  def __len__(self) -> int:
    return self.width

  def __iter__(self) -> t.Iterator[QubitId]:
    return iter(range(self.start, self.stop))

  def __contains__(self, qubit) -> bool:
    return self.start <= qubit < self.stop

  def __getitem__(self, key):
    if isinstance(key, slice):
      lo, hi, step = key.indices(self.width)
      if step != 1: return tuple(range(self.start, self.stop)[key])
      if hi <= lo: return ()
      return Register(self.start + lo, hi - lo)
    if key < 0: key += self.width
    if not 0 <= key < self.width: raise IndexError(key)
    return self.start + key

  def overlaps(self, other: Qubits) -> bool:
    return any(q in self for q in other)

  def __repr__(self) -> str:
    return f"Register({self.start}:{self.stop})"

@dataclasses.dataclass(frozen=True)
class Gate:
  kind: GateKind
  qubits: t.Tuple[QubitId, ...] = ()
  register: t.Optional[Register] = None

  def validate(self) -> 'Gate':
    arity = {'x': 1, 'cnot': 2, 'toffoli': 3, 'unand': 3, 'release': 0}.get(self.kind)
    if arity is None: raise InvalidGate(f"Unknown gate kind {self.kind!r}")
    if len(self.qubits) != arity: raise InvalidGate(f"{self.kind} expects {arity} operands, got {self.qubits}")
    if len(set(self.qubits)) != len(self.qubits): raise InvalidGate(f"Duplicate operands in {self}")
    if any(q < 0 for q in self.qubits): raise InvalidGate(f"Negative qubit in {self}")
    if (self.kind == 'release') != (self.register is not None): raise InvalidGate(f"Only release carries a register: {self}")
    return self

  @property
  def touched(self) -> t.Iterable[QubitId]:
    return self.register if self.register is not None else self.qubits

  def __str__(self) -> str:
    if self.kind == 'release': return f"release({self.register.start}:{self.register.stop})"
    return f"{self.kind}({', '.join(map(str, self.qubits))})"

def X(target: QubitId) -> Gate:
  return Gate('x', (target,))

def CNOT(control: QubitId, target: QubitId) -> Gate:
  return Gate('cnot', (control, target))

def TOFFOLI(control1: QubitId, control2: QubitId, target: QubitId) -> Gate:
  return Gate('toffoli', (control1, control2, target))

def UNAND(control1: QubitId, control2: QubitId, target: QubitId) -> Gate:
  ''' Measure away a target known to hold control1 AND control2, leaving it zero.
  The classically controlled phase fixup is Clifford, so no T-states are spent.
  '''
  return Gate('unand', (control1, control2, target))

def RELEASE(register: Register) -> Gate:
  return Gate('release', (), register)

@dataclasses.dataclass(frozen=True)
class CircuitTally:
  qubit_highwater: int = 0
  toffoli: int = 0
  cnot: int = 0
  x: int = 0
  measurements: int = 0
  # measurement-based AND uncomputations, charged to the Toffoli that computed the AND
  and_uncomputes: int = 0

  def __post_init__(self):
    for field in dataclasses.fields(self):
      if getattr(self, field.name) < 0:
        raise InvalidArgument(f"{field.name} must be non-negative")

  def __add__(self, other: 'CircuitTally') -> 'CircuitTally':
    return merge_tally(self, other)

  def to_dict(self) -> t.Dict[str, int]:
    return dataclasses.asdict(self)

  @staticmethod
  def from_dict(**kwargs) -> 'CircuitTally':
    return CircuitTally(**kwargs)

EMPTY_TALLY = CircuitTally()

GATE_COUNTERS = {'x': 'x', 'cnot': 'cnot', 'toffoli': 'toffoli', 'unand': 'and_uncomputes'}

def record_gate(tally: CircuitTally, gate: Gate) -> CircuitTally:
  gate.validate()
  highwater = max(tally.qubit_highwater, 1 + max(gate.touched))
  if gate.kind == 'release':
    return dataclasses.replace(tally, qubit_highwater=highwater, measurements=tally.measurements + gate.register.width)
  counter = GATE_COUNTERS[gate.kind]
  return dataclasses.replace(tally, qubit_highwater=highwater, **{counter: getattr(tally, counter) + 1})

def merge_tally(a: CircuitTally, b: CircuitTally) -> CircuitTally:
  return CircuitTally(
    qubit_highwater=max(a.qubit_highwater, b.qubit_highwater),
    toffoli=a.toffoli + b.toffoli,
    cnot=a.cnot + b.cnot,
    x=a.x + b.x,
    measurements=a.measurements + b.measurements,
    and_uncomputes=a.and_uncomputes + b.and_uncomputes,
  )

T_STATES_PER_TOFFOLI = 4

def t_states_of(tally: CircuitTally, per_toffoli: int = T_STATES_PER_TOFFOLI) -> int:
  ''' T-states consumed; the multiplication circuits hold no bare T gates or rotations '''
  return per_toffoli * tally.toffoli

def tally_gates(gates: t.Iterable[Gate]) -> CircuitTally:
  tally = EMPTY_TALLY
  for gate in gates:
    tally = record_gate(tally, gate)
  return tally

class GateSink:
  ''' A generic interface for anything that consumes a gate stream
  '''
  # sinks with counts_only set accept closed-form block tallies instead of gates
  counts_only = False

  @staticmethod
  def from_dict(*, cls, **kwargs):
    import importlib
    mod, _, name = cls.rpartition('.')
    cls = getattr(importlib.import_module(mod), name)
    if cls.from_dict is GateSink.from_dict: return cls(**kwargs)
    else: return cls.from_dict(**kwargs)

  def to_dict(self) -> t.Dict[str, t.Any]:
    cls = self.__class__
    return dict(cls=f"{cls.__module__}.{cls.__name__}")

  # essential
  def gate(self, gate: Gate):
    raise NotImplementedError()
  def tally(self) -> CircuitTally:
    raise NotImplementedError()

  # optional
  def absorb(self, tally: CircuitTally):
    raise NotImplementedError()

  # fallback
  def x(self, target: QubitId):
    self.gate(X(target))
  def cnot(self, control: QubitId, target: QubitId):
    self.gate(CNOT(control, target))
  def toffoli(self, control1: QubitId, control2: QubitId, target: QubitId):
    self.gate(TOFFOLI(control1, control2, target))
  def unand(self, control1: QubitId, control2: QubitId, target: QubitId):
    self.gate(UNAND(control1, control2, target))
  def release(self, register: Register):
    self.gate(RELEASE(register))

  def __repr__(self) -> str:
    return f"GateSink({repr(self.to_dict())})"
