"""Default holocodes configuration."""


#################
# Search bounds #
#################

#: Largest field order q accepted by ``field_create``
FIELD_SIZE_BOUND = 2 ** 16

#: Largest number of codewords (or supports) visited by exhaustive searches
SEARCH_BOUND = 2 ** 24

#: Largest Hilbert space dimension q^n handled by the eigenspace oracle
ORACLE_BOUND = 2 ** 12

###############
# Depth caps  #
###############

#: Deepest tree accepted by ``tree_build``
TREE_DEPTH_BOUND = 8

#: Most rings grown by ``region_build``
REGION_DEPTH_BOUND = 4

############
# Defaults #
############

#: Field order used by surface codes when none is given
DEFAULT_SURFACE_Q = 2

#: Indentation of the JSON printed by the command line
JSON_INDENT = 2
