''' Fan independent jobs out over spawned worker processes.

Results come back in job order regardless of completion order. Exceptions
raised by a job are carried back and re-raised in the caller.
'''
import logging
import typing as t
import dataclasses
import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor

logger = logging.getLogger(__name__)

mp_spawn = mp.get_context('spawn')

T = t.TypeVar('T')

@dataclasses.dataclass
class Result:
  err: t.Optional[BaseException] = None
  val: t.Optional[t.Any] = None

def _guarded(func, args) -> Result:
  try:
    return Result(val=func(*args))
  except Exception as err:
    return Result(err=err)

def map_spawned(func: t.Callable[..., T], jobs: t.Sequence[t.Tuple], workers: int = 1) -> t.List[T]:
  ''' [func(*job) for job in jobs], over at most `workers` processes '''
  if workers <= 1 or len(jobs) <= 1:
    results = [_guarded(func, job) for job in jobs]
  else:
    logger.debug(f"running {len(jobs)} jobs on {workers} workers")
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs)), mp_context=mp_spawn) as pool:
      results = list(pool.map(_guarded, [func] * len(jobs), jobs))
  for result in results:
    if result.err is not None:
      raise result.err
  return [result.val for result in results]
