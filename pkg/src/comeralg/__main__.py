from comeralg.cli import main

main()
