from cogrowth.utils import *
from cogrowth.words import *
from cogrowth.growth import *
from cogrowth.graphs import *
from cogrowth.construction import *
from cogrowth.algebra import *
