# Lattices, tilings and polynomial arithmetic
