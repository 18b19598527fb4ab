from minorlab.cli import main

main()
