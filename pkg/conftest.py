collect_ignore = ["src/hecke_poincare/__main__.py"]
