# Keeps this directory on sys.path so tests can import the local oracles module.
