# File: moments/hausdorff.py
"""Truncated Hausdorff moment problem on [-1, 1].

A measure on [-1, 1] with moments m_0..m_N makes each of the following PSD:
  hankel          (m_{i+j}),                 i, j <= N/2
  localizer_minus (m_{i+j} - m_{i+j+1}),     i, j <= (N-1)/2   support weight 1 - s
  localizer_plus  (m_{i+j} + m_{i+j+1}),     i, j <= (N-1)/2   support weight 1 + s
  localizer_square(m_{i+j} - m_{i+j+2}),     i, j <= (N-2)/2   support weight 1 - s^2
A violated matrix certifies that no representing measure exists. Passing all
of them only means the data is consistent up to order N.
"""
from config.config import Config
from utils.exceptions import BadInput
from utils.linalg import is_psd, min_eigenvalue, scale_of, to_float_matrix
from utils.logger import get_logger
from moments.models import MatrixCheck, MomentSequence, MomentVerdict, VerdictStatus

logger = get_logger(__name__)


def _hankel(m, size, shift=0, sign=0, gap=1):
    """(m_{i+j+shift} + sign * m_{i+j+shift+gap}) for i, j < size"""
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            value = m[i + j + shift]
            if sign:
                value = value + sign * m[i + j + shift + gap]
            row.append(value)
        rows.append(row)
    return rows


def moment_matrices(m):
    """Named matrices tested for a sequence of order N = len(m) - 1"""
    order = len(m) - 1
    matrices = {'hankel': _hankel(m, order // 2 + 1)}
    if order >= 1:
        size = (order - 1) // 2 + 1
        matrices['localizer_minus'] = _hankel(m, size, sign=-1)
        matrices['localizer_plus'] = _hankel(m, size, sign=1)
    if order >= 2:
        matrices['localizer_square'] = _hankel(m, (order - 2) // 2 + 1, sign=-1, gap=2)
    return matrices


def hausdorff_check(m, tol=None):
    """PSD test of the Hankel and localizing matrices of a moment sequence"""
    if not isinstance(m, MomentSequence):
        m = MomentSequence(tuple(m))
    if len(m) == 0:
        raise BadInput("Empty moment sequence")
    tol = Config.TOLERANCE if tol is None else float(tol)
    if tol < 0:
        raise BadInput(f"Tolerance must be >= 0, got {tol}")

    scale = scale_of(m.values)
    checks = []
    for name, rows in moment_matrices(m.values).items():
        min_eig = min_eigenvalue(to_float_matrix(rows))
        checks.append(MatrixCheck(name, len(rows), min_eig, is_psd(min_eig, tol, scale)))

    violated = [check for check in checks if not check.passed]
    if violated:
        witness = min(violated, key=lambda check: check.min_eig)
        logger.debug(f"moment check failed: {witness.name} min eigenvalue {witness.min_eig:.3g}")
        return MomentVerdict(VerdictStatus.INFEASIBLE, tuple(checks), witness, tol, scale, m)
    return MomentVerdict(VerdictStatus.FEASIBLE, tuple(checks), None, tol, scale, m)
