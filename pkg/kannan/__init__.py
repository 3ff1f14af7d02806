"""
Kannan lab: exact verification of Kannan-type contractive self-maps.
"""
