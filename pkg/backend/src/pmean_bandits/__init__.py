"""p-mean regret simulator for stochastic multi-armed bandits."""

__version__ = "0.1.0"
