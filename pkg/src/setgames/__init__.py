"""Short combinatorial games under set equality."""

from setgames.core import GameId, GameStore, UnknownGameError, ZERO
from setgames.notation import ParseError, evaluate, parse, print_game
from setgames.universe import SampleSpec, Tier, TierTooLargeError, enumerate_tier, sample_games

__all__ = [
    "GameId",
    "GameStore",
    "ParseError",
    "SampleSpec",
    "Tier",
    "TierTooLargeError",
    "UnknownGameError",
    "ZERO",
    "enumerate_tier",
    "evaluate",
    "parse",
    "print_game",
    "sample_games",
]
