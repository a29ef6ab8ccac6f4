"""Exact verification of the part-count companions to the Rogers-Ramanujan identities.

Modules:
    qseries      truncated integer power series and q-analogue primitives
    partitions   partitions, marked partitions, pair decomposition, enumerators
    genfun       generating functions for both identities and their excesses
    bijections   the injections phi and psi and the image-set predicates
    verify       named multi-route checks
    cli          command-line front end
"""

from .partitions import MarkedPartition, Partition, PartitionClass, RectPair
from .qseries import TruncatedSeries

__version__ = "0.1.0"

__all__ = ["MarkedPartition", "Partition", "PartitionClass", "RectPair", "TruncatedSeries"]
