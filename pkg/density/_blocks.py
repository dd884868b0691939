import numpy as np

from density.core import BlockODE

# rotation generator shared by the 2x2 systems
J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


class ScalarX(BlockODE):
    """x'' = (lam_j^2 + (lam - lam_j) lam_j Phi^2) x"""

    kind = "scalar_x"

    def __init__(self, lam: float, lam_j: float) -> None:
        pass

    def accel(self, q, Phi, pos, vel):
        lam, lj = self.lam, self.lam_j
        return (lj ** 2 + (lam - lj) * lj * Phi ** 2) * pos

    def contribution(self, pos):
        return pos[:, 0, 0]

    def at_zero(self, t):
        return np.sinh(self.lam_j * t) / self.lam_j


class ScalarY(BlockODE):
    """y'' = (lam^2 / 4 + (lam^2 - a^2) / 4 Phi^2) y; a Y-block contributes y^2"""

    kind = "scalar_y"

    def __init__(self, lam: float, a: float) -> None:
        pass

    def accel(self, q, Phi, pos, vel):
        lam, a = self.lam, self.a
        return (0.25 * lam ** 2 + 0.25 * (lam ** 2 - a ** 2) * Phi ** 2) * pos

    def contribution(self, pos):
        return pos[:, 0, 0] ** 2

    def at_zero(self, t):
        return (2.0 / self.lam * np.sinh(0.5 * self.lam * t)) ** 2


class MatrixV(BlockODE):
    """v'' + b Phi J v' + M v = 0 with

    M = [[-(q^2 l^2 + lam l Phi^2),  q Phi b l'],
         [-q Phi b l,               -(q^2 l'^2 + lam l' Phi^2)]],   l' = lam - l
    """

    kind = "matrix_v"
    size = 2

    def __init__(self, lam: float, lam_l: float, b: float) -> None:
        self.lam_l_prime = lam - lam_l

    def accel(self, q, Phi, pos, vel):
        lam, l, lp, b = self.lam, self.lam_l, self.lam_l_prime, self.b
        q, Phi = q[:, 0, 0], Phi[:, 0, 0]
        M = np.empty((len(q), 2, 2))
        M[:, 0, 0] = -(q ** 2 * l ** 2 + lam * l * Phi ** 2)
        M[:, 0, 1] = q * Phi * b * lp
        M[:, 1, 0] = -q * Phi * b * l
        M[:, 1, 1] = -(q ** 2 * lp ** 2 + lam * lp * Phi ** 2)
        return -b * Phi[:, None, None] * (J2 @ vel) - M @ pos

    def contribution(self, pos):
        return np.linalg.det(pos)

    def at_zero(self, t):
        l, lp = self.lam_l, self.lam_l_prime
        return np.sinh(l * t) / l * np.sinh(lp * t) / lp


class RawY(BlockODE):
    """w'' + a Phi J w' + 1/2 a lam Phi q J w - lam^2 / 4 (1 + Phi^2) w = 0

    The Y-block system before the rotation w = exp(-a/2 int Phi J) z that
    decouples it; det w equals the y^2 of ScalarY.
    """

    kind = "raw_y"
    size = 2

    def __init__(self, lam: float, a: float) -> None:
        pass

    def accel(self, q, Phi, pos, vel):
        lam, a = self.lam, self.a
        return (
            -a * Phi * (J2 @ vel)
            - 0.5 * a * lam * Phi * q * (J2 @ pos)
            + 0.25 * lam ** 2 * (1.0 + Phi ** 2) * pos
        )

    def contribution(self, pos):
        return np.linalg.det(pos)

    def at_zero(self, t):
        return (2.0 / self.lam * np.sinh(0.5 * self.lam * t)) ** 2
