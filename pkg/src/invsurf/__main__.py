from invsurf.cli import main

main()
