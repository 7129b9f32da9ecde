''' CSV and JSON renderings of sweep rows, and crossover search.

Output is deterministic: rows are sorted, floats use fixed formats and
nothing time dependent is written.
'''
import io
import csv
import json
import typing as t
from qmul.access.sweep import ResultRow

HEADER = (
  'algorithm', 'n', 'mode', 'platform', 'code',
  'logical_qubits_alg', 'logical_qubits_total', 'toffoli', 't_states', 'measurements',
  'code_distance', 'phys_per_logical', 'tfactories', 'tfactory_qubits', 'physical_qubits',
  'logical_cycles', 'runtime_seconds', 'error',
)

def format_seconds(seconds: float) -> str:
  return f"{seconds:.6e}"

def row_record(row: ResultRow) -> t.Dict[str, t.Any]:
  ''' The row as a flat mapping over HEADER; missing values are None '''
  record = dict.fromkeys(HEADER)
  record.update(algorithm=row.algorithm, n=row.n, mode=row.mode, platform=row.platform, code=row.code, error=row.error)
  if row.tally is not None:
    record.update(toffoli=row.tally.toffoli, measurements=row.tally.measurements)
  est = row.estimate
  if est is not None:
    record.update(
      logical_qubits_alg=est.q_alg,
      logical_qubits_total=est.q_total,
      t_states=est.t_states,
      code_distance=est.distance,
      phys_per_logical=est.phys_per_logical,
      tfactories=est.factories,
      tfactory_qubits=est.factory_qubits,
      physical_qubits=est.physical_qubits,
      logical_cycles=est.logical_cycles,
      runtime_seconds=est.runtime_seconds,
    )
  return record

def sorted_rows(rows: t.Iterable[ResultRow]) -> t.List[ResultRow]:
  return sorted(rows, key=lambda row: row.sort_key)

def write_csv(rows: t.Iterable[ResultRow]) -> bytes:
  buffer = io.StringIO()
  writer = csv.writer(buffer, lineterminator='\n')
  writer.writerow(HEADER)
  for row in sorted_rows(rows):
    record = row_record(row)
    if record['runtime_seconds'] is not None:
      record['runtime_seconds'] = format_seconds(record['runtime_seconds'])
    writer.writerow(['' if record[key] is None else record[key] for key in HEADER])
  return buffer.getvalue().encode()

def write_json(rows: t.Iterable[ResultRow]) -> bytes:
  records = []
  for row in sorted_rows(rows):
    record = row_record(row)
    if row.tally is not None: record['tally'] = row.tally.to_dict()
    if row.estimate is not None and row.estimate.factory is not None:
      record['factory'] = row.estimate.factory.to_dict()
    records.append(record)
  return (json.dumps(records, indent=2) + '\n').encode()

def find_crossover(rows: t.Iterable[ResultRow], slow: str = 'schoolbook', fast: str = 'karatsuba', metric: str = 't_states', platform: t.Optional[str] = None) -> t.Optional[int]:
  ''' The smallest n at which `fast` scores strictly below `slow` on `metric` '''
  values: t.Dict[t.Tuple[str, int, str], t.Any] = {}
  for row in rows:
    if platform is not None and row.platform != platform: continue
    value = row_record(row)[metric]
    if value is not None:
      values[(row.algorithm, row.n, row.platform)] = value
  for (algorithm, n, where), value in sorted(values.items(), key=lambda item: item[0][1]):
    if algorithm != fast: continue
    other = values.get((slow, n, where))
    if other is not None and value < other:
      return n
  return None
