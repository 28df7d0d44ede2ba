from symadapt.tooling.cli import entry_point

entry_point()
