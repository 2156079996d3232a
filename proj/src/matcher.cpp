namespace cycoh {}
