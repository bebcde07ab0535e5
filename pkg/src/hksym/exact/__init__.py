from .cyclotomic import Cyclotomic, cyclotomic_polynomial, galois_apply
from .qmod2 import QMod2
from .series import BiSeries

__all__ = ["Cyclotomic", "cyclotomic_polynomial", "galois_apply", "QMod2", "BiSeries"]
