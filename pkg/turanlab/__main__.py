from turanlab.cli import main

main()
