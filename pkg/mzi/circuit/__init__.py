"""Circuit description language: reading, sweeping and CSV output.

A circuit file holds one statement per line:
    source (unpolarized|singlet|triplet|vacuum)
    beamsplitter t=<complex> r=<complex> [tp=<complex> rp=<complex>] [lossless] [symmetric]
    dephase arm=(a|b) spin=(up|down|both) phi=<expr>
    sweep <ident> from <expr> to <expr> steps <int>
    detect (rate Da|rate Db|coincidence|phase)
Complex literals are written RE+IMi, "#" starts a comment.
"""
