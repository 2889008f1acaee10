from cogrowth.algebra.polynomial import *
from cogrowth.algebra.echelon import *
from cogrowth.algebra.ideals import *
