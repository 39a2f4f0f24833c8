from src.oracle.brute_force import brute_force, verify
