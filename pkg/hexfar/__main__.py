# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from . import App


def main():
    (App()).run()


if __name__ == '__main__':
    main()
