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
import inspect

import numpy as np


class SolvHarmError(Exception):
    """Root of every error raised by the library"""


class AlgebraError(SolvHarmError):
    """A metric Lie algebra failed one of its structural invariants"""


class AntisymmetryViolation(AlgebraError):
    pass


class JacobiViolation(AlgebraError):
    pass


class NotNilpotentIdeal(AlgebraError):
    pass


class DNotSymmetricPositive(AlgebraError):
    pass


class GradingViolation(AlgebraError):
    pass


class EigenvalueSeparationError(AlgebraError):
    pass


class NoCliffordModule(AlgebraError):
    def __init__(self, dim_z, dim_u, detail=""):
        self.dim_z = dim_z
        self.dim_u = dim_u
        msg = f"no real Clifford module of dimension {dim_u} over {dim_z} generators"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class AlgebraSpecError(SolvHarmError):
    """An AlgebraSpec document is malformed or fails its schema"""


class BlockSeparationFailure(SolvHarmError):
    pass


class StepCountTooSmall(SolvHarmError):
    pass


class OrderTooLarge(SolvHarmError):
    pass


class InexactBlockData(SolvHarmError):
    pass


class GeometryObject:
    """Base for the library's immutable value objects.

    Constructor arguments are bound from the signature before `__init__` runs and
    stored as attributes, so subclasses never call `super().__init__()`. Once
    `__init__` returns the object is frozen; numpy arrays handed out are read-only.
    """

    def __new__(cls, *args, **kwargs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "frozen_", False)
        object.__setattr__(obj, "attrs_", {})
        arguments = inspect.signature(cls.__init__).bind(obj, *args, **kwargs)
        arguments.apply_defaults()
        object.__setattr__(obj, "arguments_", arguments)

        for key, val in list(arguments.arguments.items())[1:]:
            obj.__setattr__(key, val)

        return obj

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        init = cls.__dict__.get("__init__")
        if init is None:
            return

        def frozen_init(self, *args, **kw):
            init(self, *args, **kw)
            if type(self).__init__ is cls.__init__:
                object.__setattr__(self, "frozen_", True)

        frozen_init.__signature__ = inspect.signature(init)
        frozen_init.__doc__ = init.__doc__
        cls.__init__ = frozen_init

    @property
    def name(self):
        return self.__class__.__name__

    @property
    def attrs(self):
        return self.attrs_

    def __str__(self):
        return self.name

    def __setattr__(self, key, val):
        if self.__dict__.get("frozen_", False):
            self.throw(AttributeError, f"is immutable, cannot set `{key}`")
        if isinstance(val, np.ndarray):
            val = val.view()
            val.flags.writeable = False
        if key[-1] != "_" and not callable(val):
            self.attrs[key] = val
        object.__setattr__(self, key, val)

    def __reduce__(self):
        """Rebuild from the bound constructor arguments (process pools pickle these)"""
        return (_rebuild, (self.__class__, self.arguments_.args[1:], self.arguments_.kwargs))

    def throw(self, err, msg):
        raise err(f"Class {self.name}: {msg}")


def _rebuild(cls, args, kwargs):
    return cls(*args, **kwargs)
