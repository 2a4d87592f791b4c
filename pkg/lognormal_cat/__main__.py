from lognormal_cat.cli import main

raise SystemExit(main())
