''' Brute-force functional verification of the multiplication builders.

Each case loads (a0, b, c), replays the recorded circuit and checks that
a ends at (a0 + b*c) mod 2^(2n), that b and c are unchanged and that every
other qubit is back at zero. In mode qc the circuit depends on c, so cases
are grouped per constant and each group gets its own build.
'''
import logging
import typing as t
import dataclasses
import numpy as np
from qmul.spec import InvalidArgument
from qmul.impl.recording import Recording
from qmul.arith.spec import MultiplySpec
from qmul.arith.multiplier import build_multiplier
from qmul.sim.state import init_state, load_register, read_values, run
from qmul.utils.process import map_spawned

logger = logging.getLogger(__name__)

EXHAUSTIVE_BUDGET_BITS = 20
MAX_BATCH = 1 << 16

@dataclasses.dataclass(frozen=True)
class Exhaustive:
  pass

@dataclasses.dataclass(frozen=True)
class Random:
  samples: int
  seed: int = 0

  def __post_init__(self):
    if self.samples < 1: raise InvalidArgument(f"samples must be positive, got {self.samples}")

Strategy = t.Union[Exhaustive, Random]

Failure = t.Tuple[int, int, int, int, int]

@dataclasses.dataclass
class VerifyReport:
  cases: int = 0
  failures: t.List[Failure] = dataclasses.field(default_factory=list)
  ancilla_violations: int = 0

  @property
  def ok(self) -> bool:
    return not self.failures and not self.ancilla_violations

  def merge(self, other: 'VerifyReport') -> 'VerifyReport':
    return VerifyReport(
      cases=self.cases + other.cases,
      failures=self.failures + other.failures,
      ancilla_violations=self.ancilla_violations + other.ancilla_violations,
    )

  def to_dict(self) -> t.Dict[str, t.Any]:
    return dict(
      cases=self.cases,
      failures=[dict(zip(('a0', 'b', 'c', 'got', 'expected'), f)) for f in self.failures],
      ancilla_violations=self.ancilla_violations,
    )

def exhaustive_bits(spec: MultiplySpec) -> int:
  ''' log2 of the exhaustive case count: a0, b and c, with c swept over every constant in mode qc '''
  return 4 * spec.n

def check_cases(spec: MultiplySpec, c_constant: t.Optional[int], a0s: np.ndarray, bs: np.ndarray, cs: np.ndarray, mutate: t.Optional[t.Callable] = None) -> VerifyReport:
  ''' Run one build over a batch of inputs. `mutate` may rewrite the recorded gate list. '''
  sink = Recording()
  registers = build_multiplier(spec, c_constant, sink)
  gates = mutate(list(sink.gates)) if mutate else sink.gates
  state = init_state(registers.qubit_count, batch=len(a0s))
  load_register(state, registers.a, a0s)
  load_register(state, registers.b, bs)
  if registers.c is not None: load_register(state, registers.c, cs)
  run(state, gates)
  got = read_values(state, registers.a)
  expected = (a0s + bs * cs) % (1 << 2 * spec.n)
  bad = (got != expected) | (read_values(state, registers.b) != bs)
  if registers.c is not None:
    bad |= read_values(state, registers.c) != cs
  workspace = np.ones(registers.qubit_count, dtype=bool)
  for register in registers.io:
    workspace[register.start:register.stop] = False
  dirty = state.bits[workspace].any(axis=0)
  return VerifyReport(
    cases=len(a0s),
    failures=[
      (int(a0s[i]), int(bs[i]), int(cs[i]), int(got[i]), int(expected[i]))
      for i in np.flatnonzero(bad)
    ],
    ancilla_violations=int(dirty.sum()),
  )

def _random_values(rng: np.random.Generator, count: int, width: int) -> np.ndarray:
  bits = rng.integers(0, 2, size=(width, count))
  acc = np.zeros(count, dtype=object)
  for row in bits[::-1]:
    acc = acc * 2 + row.astype(object)
  return acc

def _object(values) -> np.ndarray:
  return np.asarray(values, dtype=object)

def _exhaustive_jobs(spec: MultiplySpec):
  n = spec.n
  if exhaustive_bits(spec) > EXHAUSTIVE_BUDGET_BITS:
    raise InvalidArgument(f"Exhaustive verification of n={n} needs 2^{exhaustive_bits(spec)} cases, the budget is 2^{EXHAUSTIVE_BUDGET_BITS}")
  if spec.mode == 'qq':
    cases = np.arange(1 << 4 * n, dtype=np.int64)
    for lo in range(0, len(cases), MAX_BATCH):
      chunk = cases[lo:lo + MAX_BATCH]
      yield (None, _object(chunk & ((1 << 2 * n) - 1)), _object(chunk >> 2 * n & ((1 << n) - 1)), _object(chunk >> 3 * n))
  else:
    cases = np.arange(1 << 3 * n, dtype=np.int64)
    for c in range(1 << n):
      yield (c, _object(cases & ((1 << 2 * n) - 1)), _object(cases >> 2 * n), _object(np.full(len(cases), c)))

def _random_jobs(spec: MultiplySpec, strategy: Random):
  n = spec.n
  rng = np.random.default_rng(strategy.seed)
  a0s = _random_values(rng, strategy.samples, 2 * n)
  bs = _random_values(rng, strategy.samples, n)
  cs = _random_values(rng, strategy.samples, n)
  if spec.mode == 'qq':
    for lo in range(0, strategy.samples, MAX_BATCH):
      yield (None, a0s[lo:lo + MAX_BATCH], bs[lo:lo + MAX_BATCH], cs[lo:lo + MAX_BATCH])
  else:
    for c in sorted(set(cs)):
      mask = cs == c
      yield (int(c), a0s[mask], bs[mask], cs[mask])

def verify_multiplier(spec: MultiplySpec, strategy: Strategy, *, workers: int = 1) -> VerifyReport:
  ''' Check a += b*c over every input (Exhaustive) or a seeded sample (Random) '''
  if isinstance(strategy, Exhaustive):
    jobs = list(_exhaustive_jobs(spec))
  elif isinstance(strategy, Random):
    jobs = list(_random_jobs(spec, strategy))
  else:
    raise InvalidArgument(f"Unknown verification strategy {strategy!r}")
  logger.info(f"verifying {spec.algorithm} n={spec.n} mode={spec.mode} in {len(jobs)} batches")
  report = VerifyReport()
  for part in map_spawned(check_cases, [(spec, *job) for job in jobs], workers=workers):
    report = report.merge(part)
  return report
