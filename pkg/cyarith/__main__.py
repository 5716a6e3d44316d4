from cyarith.cli import cli

cli(prog_name="cyarith")
