# Heights, type geometry, Kasteleyn matrices, quotients and flips
