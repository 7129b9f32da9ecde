''' A cache provider which remembers the results (and failures) of the
resolve function for each key it has seen.
'''
import typing as t
from qmul.utils.process import Result

K = t.TypeVar('K', bound=t.Hashable)
T = t.TypeVar('T')

class MemoCache(t.Generic[K, T]):
  def __init__(self, resolve: t.Callable[[K], T]):
    self._resolve = resolve
    self._store: t.Dict[K, Result] = {}

  def __call__(self, key: K) -> T:
    try:
      item = self._store[key]
    except KeyError:
      try:
        item = Result(val=self._resolve(key))
      except Exception as err:
        item = Result(err=err)
      self._store[key] = item
    if item.err is not None:
      raise item.err
    else:
      return item.val

  def __setitem__(self, key: K, val: T):
    self._store[key] = Result(val=val)

  def __contains__(self, key: K) -> bool:
    return key in self._store

  def __len__(self) -> int:
    return len(self._store)

  def discard(self, key: K):
    self._store.pop(key, None)
