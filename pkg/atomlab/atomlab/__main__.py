import atomlab.cli

atomlab.cli.run()
