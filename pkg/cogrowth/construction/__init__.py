from cogrowth.construction.essential import *
