"""
Lefschetz sl2 action on the exterior algebra and its integral components.
"""
