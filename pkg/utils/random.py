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
import jax
import numpy as np

from config import SCAN_SEED


class Random:
    """Splittable key stream; every draw consumes a fresh subkey.

    Draws come back as float64 numpy arrays so downstream linear algebra never
    sees jax float32 values.
    """

    def __init__(self, seed: int = SCAN_SEED) -> None:
        self.set_key(seed)

    def set_key(self, seed=None) -> None:
        self.seed = SCAN_SEED if seed is None else int(seed)
        self.key = jax.random.PRNGKey(self.seed)

    def get_key(self):
        return self.key

    def generate_key(self):
        """Generates random subkey"""
        self.key, subkey = jax.random.split(self.key)
        return subkey

    def normal(self, shape) -> np.ndarray:
        return np.asarray(jax.random.normal(self.generate_key(), shape), dtype=np.float64)

    def orthogonal(self, dim: int) -> np.ndarray:
        """Haar-distributed orthogonal matrix (QR with the sign of R's diagonal fixed)"""
        if dim == 0:
            return np.zeros((0, 0))
        q, r = np.linalg.qr(self.normal((dim, dim)))
        signs = np.sign(np.diag(r))
        signs[signs == 0] = 1.0
        return q * signs
