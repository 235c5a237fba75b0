from augcube.cli import main

main()
