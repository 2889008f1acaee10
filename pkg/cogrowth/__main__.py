from cogrowth.cli import run

run()
