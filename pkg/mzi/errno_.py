"""Error Numbers.

Every failure raised by the library carries one of these codes in MziError.error. The CLI maps them to exit statuses
(see mzi.error.exit_status).
"""

MZE_SUCCESS = 0
MZE_FAILURE = 1
MZE_INVAL = 2
MZE_NOT_NORMALIZED = 3
MZE_ACCURACY = 4
MZE_TOO_FEW_SAMPLES = 5
MZE_NOT_INCREASING = 6
MZE_AMBIGUOUS_LIFT = 7
MZE_NOT_CLOSED = 8
MZE_NOT_DENSITY = 9
MZE_UNSUPPORTED_SOURCE = 10
MZE_ASYMMETRIC = 11
MZE_NOT_LOSSLESS = 12
MZE_LEXICAL = 13
MZE_SYNTAX = 14
MZE_UNKNOWN_KEYWORD = 15
MZE_DUPLICATE = 16
MZE_MISSING = 17
MZE_UNDEFINED_VARIABLE = 18
MZE_BAD_SWEEP = 19
MZE_ENGINE = 20
MZE_OUTPUT = 21

MZE_MAX = MZE_OUTPUT
