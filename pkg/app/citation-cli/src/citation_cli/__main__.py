from citation_cli.cli import app

app()
