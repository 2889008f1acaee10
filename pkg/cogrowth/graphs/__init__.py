from cogrowth.graphs.coset_graph import *
from cogrowth.graphs.folding import *
from cogrowth.graphs.quotients import *
from cogrowth.graphs.checks import *
from cogrowth.graphs.intersection import *
from cogrowth.graphs.random_subgroups import *
