#! /usr/bin/env python
import sys
import logging

logging.basicConfig(level=logging.INFO)

def run_eval(args):
    from harmonic_kernels.cli import run
    return run(['eval'] + args)

def run_verify(args):
    from harmonic_kernels.cli import run
    return run(['verify'] + args)

def run_sweep(args):
    from harmonic_kernels.cli import run
    return run(['sweep'] + args)

def run_suite(args):
    from harmonic_kernels.cli import run
    return run(['suite'] + args)


SUBCOMMANDS = {
    "eval": run_eval,
    "verify": run_verify,
    "sweep": run_sweep,
    "suite": run_suite,
}

if __name__ == "__main__":
    logging.info("Running %s", sys.argv)

    if len(sys.argv) < 2 or sys.argv[1] not in SUBCOMMANDS:
        logging.info("No subcommand specified. Run main.py [SUBCOMMAND], where subcommand is one of %s", sorted(SUBCOMMANDS))
        exit(2)

    subcommand = sys.argv[1]
    subcommand_args = sys.argv[2:]

    exit(SUBCOMMANDS[subcommand](subcommand_args))
