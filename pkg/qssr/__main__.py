from qssr.cli import main

main()
