# Periodic lozenge tilings engine package
