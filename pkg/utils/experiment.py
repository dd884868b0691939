# Copyright 2020 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""utils/experiment.py

Grid runner for scans: evaluates a function over the cartesian product of
argument lists, sequentially or on a process pool, always returning results
in grid order so that reductions over them are deterministic.
"""
import inspect
import logging
from typing import Any
from typing import Callable
from typing import Dict
from typing import Iterator
from typing import List
from typing import Sequence
from typing import Tuple
from typing import Union

import multiprocess.context as ctx
import numpy as np
import pathos

ctx._force_start_method("spawn")

logger = logging.getLogger(__name__)


def runner(args: Tuple[Callable, Dict[str, Any]]) -> Any:
    """Runner function for process pool

    Args:
        args: pair of the function to run and its keyword arguments

    Returns:
        Any: the result of the call
    """
    return args[0](**args[1])


def product(*args: Sequence[Any]) -> Iterator[Tuple[Any, ...]]:
    """Cartesian product that keeps tuples as single grid values

    Notes:
        * itertools.product would do, but this keeps the first argument as the
        slowest-varying axis without materializing every argument list
    """
    if args:
        for a in args[0]:
            for prod in product(*args[1:]) if args[1:] else ((),):
                yield (a,) + prod


class experiment:
    """Decorator binding a function to a grid of keyword arguments"""

    def __init__(self, argnames: Union[List[str], str], arglists: List[Sequence[Any]]) -> None:
        """
        Args:
            argnames: list of names or comma-delimited string of names (as in pytest)
            arglists: one value list per name; the grid is their product
        """
        if isinstance(argnames, list):
            self._argnames = argnames
        else:
            self._argnames = [argname.strip() for argname in argnames.split(",")]

        if len(self._argnames) != len(arglists):
            raise ValueError(
                f"Got {len(self._argnames)} argnames but {len(arglists)} argument lists"
            )
        self._arglists = [list(arglist) for arglist in arglists]
        self._fixed = {}

    def __call__(self, func: Callable) -> "experiment":
        self._func = func
        return self

    def bind(self, **fixed: Any) -> "experiment":
        """Keyword arguments passed unchanged to every grid point"""
        self._fixed.update(fixed)
        return self

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(arglist) for arglist in self._arglists)

    def _validate(self) -> None:
        spec = inspect.getfullargspec(self._func)
        supplied = set(self._argnames) | set(self._fixed)
        duplicated = set(self._argnames) & set(self._fixed)
        if duplicated:
            raise ValueError(f"Found grid arguments also bound as fixed: {sorted(duplicated)}")

        required = spec.args if spec.defaults is None else spec.args[: -len(spec.defaults)]
        missing = [arg for arg in required if arg not in supplied]
        if missing:
            raise ValueError(
                "Arguments without defaults not found. Required: {}. Supplied: {}".format(
                    missing, sorted(supplied)
                )
            )
        if spec.varkw is None:
            extra = [arg for arg in supplied if arg not in spec.args + spec.kwonlyargs]
            if extra:
                raise ValueError("Found unused arguments: {}".format(extra))

    def _generate_arglists(self) -> Iterator[Tuple[Callable, Dict[str, Any]]]:
        for point in product(*self._arglists):
            kwargs = dict(self._fixed)
            kwargs.update(zip(self._argnames, point))
            yield (self._func, kwargs)

    def run(self, processes: int = 1, chunksize: int = 1) -> List[Any]:
        """Evaluate every grid point; results come back in grid order"""
        self._validate()
        num_tasks = int(np.prod(self.shape))
        logger.debug("running %d grid points on %d process(es)", num_tasks, processes)

        if processes == 1:
            return list(map(runner, self._generate_arglists()))

        pool = pathos.pools.ProcessPool(nodes=processes)
        try:
            # imap preserves submission order
            return list(pool.imap(runner, self._generate_arglists(), chunksize=chunksize))
        finally:
            pool.close()
            pool.join()
            pool.clear()
