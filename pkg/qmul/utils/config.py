''' Flat `key = value` files shared by parameter sets and estimator overrides.

Blank lines and `#` comments are ignored; values may be integers, floats in
scientific notation or bare words. Paths with a protocol (`memory://`,
`s3://`, ...) are opened through fsspec when it is installed.
'''
import re
import typing as t
import dataclasses
from qmul.spec import ParamsError

Value = t.Union[int, float, str]

@dataclasses.dataclass(frozen=True)
class Entry:
  value: Value
  line: int

line_expr = re.compile(r'^\s*(?P<key>[A-Za-z_][\w.]*)\s*=\s*(?P<value>[^#]*?)\s*(#.*)?$')
url_expr = re.compile(r'^(?P<proto>[^:/]+)://(?P<path>.*)$')

def parse_value(raw: str) -> Value:
  for cast in (int, float):
    try:
      return cast(raw)
    except ValueError:
      pass
  return raw

def parse_flat(text: str, *, path: t.Optional[str] = None) -> t.Dict[str, Entry]:
  entries: t.Dict[str, Entry] = {}
  for lineno, line in enumerate(text.splitlines(), start=1):
    if not line.strip() or line.lstrip().startswith('#'): continue
    m = line_expr.match(line)
    if not m or not m.group('value'):
      raise ParamsError(f"expected `key = value`, got {line.strip()!r}", path=path, line=lineno)
    key = m.group('key')
    if key in entries:
      raise ParamsError(f"duplicate key {key!r}", path=path, line=lineno, field=key)
    entries[key] = Entry(parse_value(m.group('value')), lineno)
  return entries

def read_text(path: str) -> str:
  m = url_expr.match(str(path))
  try:
    if m and m.group('proto') != 'file':
      import fsspec
      with fsspec.open(path, 'r') as fr:
        return fr.read()
    with open(m.group('path') if m else path, 'r') as fr:
      return fr.read()
  except ImportError:
    raise ParamsError('reading remote files needs fsspec (pip install qmul[complete])', path=str(path)) from None
  except OSError as err:
    raise ParamsError(f"cannot read file: {err.strerror or err}", path=str(path)) from err

def read_flat(path: str) -> t.Dict[str, Entry]:
  return parse_flat(read_text(path), path=str(path))

def require_number(entry: Entry, key: str, path: t.Optional[str] = None) -> float:
  if isinstance(entry.value, str):
    raise ParamsError(f"{key} must be a number, got {entry.value!r}", path=path, line=entry.line, field=key)
  return entry.value
