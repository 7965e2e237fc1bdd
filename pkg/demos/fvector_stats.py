"""What the face counts alone say about a few large triangulations."""
from edgeorder import stats_from_fvector
from edgeorder.complex import FVector
from edgeorder.io import render_stats

for f in [(11, 55, 154, 77), (17, 136, 544, 272), (19, 171, 684, 342), (17, 136, 680, 340)]:
    print(render_stats(stats_from_fvector(FVector(*f))))
